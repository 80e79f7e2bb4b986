#include "blockpoly/triangle.hpp"

#include <doctest.h>

#include <thread>

using namespace blockpoly;

namespace {

Row row_of(std::initializer_list<long> values) {
  Row r;
  for (long v : values) r.emplace_back(v);
  return r;
}

}  // namespace

TEST_SUITE("triangle") {
  TEST_CASE("small rows") {
    CHECK(triangle_row(TriangleKind::d(), 0) == row_of({1}));
    CHECK(triangle_row(TriangleKind::d(), 1) == row_of({0}));
    CHECK(triangle_row(TriangleKind::d(), 4) == row_of({0, 1, 3}));
    CHECK(triangle_row(TriangleKind::d(), 5) == row_of({0, 1, 10}));
    CHECK(triangle_row(TriangleKind::d(), 6) == row_of({0, 1, 25, 15}));
    CHECK(triangle_row(TriangleKind::s(), 5) == row_of({0, 1, 15, 25, 10, 1}));
    CHECK(triangle_row(TriangleKind::c(), 4) == row_of({0, 6, 11, 6, 1}));
    CHECK(triangle_row(TriangleKind::dr(1), 4) == row_of({0, 6, 3}));
    CHECK(triangle_row(TriangleKind::dr(1), 5) == row_of({0, 24, 20}));
  }

  TEST_CASE("totals") {
    const long d[] = {1, 0, 1, 1, 4, 11, 41, 162};
    const long b[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (std::size_t n = 0; n < 8; ++n) {
      CHECK(d_total(n) == d[n]);
      CHECK(bell(n) == b[n]);
    }
  }

  TEST_CASE("block size at least m") {
    CHECK(d_m_block(4, 2, 2) == 3);
    CHECK(d_m_block(6, 2, 3) == 10);
    CHECK(d_m_block(7, 2, 3) == 35);
    CHECK(d_m_block(9, 3, 3) == 280);
    CHECK(d_m_block(10, 2, 4) == 336);
    CHECK(d_m_block(5, 3, 2) == 0);
    CHECK_THROWS_AS(d_m_block(5, 1, 0), std::invalid_argument);
  }

  TEST_CASE("cycles longer than r") {
    for (std::size_t n = 0; n <= 12; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(d_r_cycle(n, k, 0) == stirling1_unsigned(n, k));
    CHECK(d_r_cycle(6, 2, 2) == 40);  // two 3-cycles
    CHECK(d_r_cycle(6, 1, 2) == 120);
  }

  TEST_CASE("entries outside the support are zero") {
    CHECK(d_count(6, 4) == 0);
    CHECK(d_count(6, 100) == 0);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
  }

  TEST_CASE("kind labels round-trip") {
    for (auto kind : {TriangleKind::d(), TriangleKind::s(), TriangleKind::c(), TriangleKind::dr(3), TriangleKind::dm(4)})
      CHECK(TriangleKind::parse(kind.label()) == kind);
    CHECK(TriangleKind::dr(2).label() == "Dr:2");
    CHECK_THROWS_AS(TriangleKind::parse("X"), std::invalid_argument);
    CHECK_THROWS_AS(TriangleKind::parse("Dm:0"), std::invalid_argument);
  }

  TEST_CASE("append_verified rejects rows that break the recurrence") {
    TriangleTable t(TriangleKind::d());
    t.row(7);
    Row good = t.next_row(8);
    Row bad = good;
    bad[2] += 1;
    CHECK_FALSE(t.append_verified(8, bad));
    CHECK(t.size() == 8);
    CHECK(t.append_verified(8, good));
    CHECK(t.size() == 9);
  }

  TEST_CASE("concurrent readers see the same rows") {
    TriangleTable t(TriangleKind::s());
    std::vector<Count> totals(4);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < 4; ++i)
      threads.emplace_back([&, i] { totals[i] = row_total(t.row(120 - i * 10)); });
    for (auto& th : threads) th.join();
    for (std::size_t i = 0; i < 4; ++i) CHECK(totals[i] == bell(120 - i * 10));
  }
}
