#include "blockpoly/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace blockpoly;

TEST_SUITE("verify") {
  TEST_CASE("suite names") {
    CHECK(suite_names().size() == 12);
    CHECK(is_suite_name("all"));
    CHECK(is_suite_name("congruence"));
    CHECK_FALSE(is_suite_name("everything"));
    CHECK_THROWS_AS(run_suite("everything", 10), std::invalid_argument);
    CHECK_THROWS_AS(run_suites("everything", 10), std::invalid_argument);
  }

  TEST_CASE("every suite passes at small n") {
    for (const std::string& name : suite_names()) {
      const SuiteResult r = run_suite(name, 20);
      CHECK_MESSAGE(r.passed, name, ": ", r.failures.empty() ? "" : r.failures.front());
      CHECK(r.checks > 0);
      CHECK(r.name == name);
    }
  }

  TEST_CASE("all keeps the declared order") {
    const auto results = run_suites("all", 12);
    REQUIRE(results.size() == suite_names().size());
    for (std::size_t i = 0; i < results.size(); ++i) CHECK(results[i].name == suite_names()[i]);
    CHECK(run_suites("ogf", 12).size() == 1);
  }
}
