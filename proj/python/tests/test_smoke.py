from fractions import Fraction

import pytest

import blockpoly


def test_triangles():
    assert blockpoly.triangle("D", 6) == [0, 1, 25, 15]
    assert blockpoly.triangle("S", 4) == [0, 1, 7, 6, 1]
    assert blockpoly.d_count(6, 2) == 25
    assert blockpoly.bell(30) == blockpoly.d_total(30) + blockpoly.d_total(31)
    assert blockpoly.d_poly(5) == [0, 1, 10]
    with pytest.raises(ValueError):
        blockpoly.triangle("Q", 3)


def test_roots_are_certified_brackets():
    roots = blockpoly.d_poly_roots(8, eps="1/1000000")
    assert len(roots) == 4
    assert roots[0] == (0, 0) or roots[0][0] <= 0 <= roots[0][1]
    for lo, hi in roots[1:]:
        assert isinstance(lo, Fraction)
        assert hi - lo <= Fraction(1, 1000000)
        assert hi < 0


def test_peak_and_bound():
    p = blockpoly.peak(20)
    assert p["peaks"] == [7]
    assert p["darroch_ok"]
    s = blockpoly.samuelson(10)
    assert abs(abs(s["z_star"]) - 9.22317966) < 1e-7
    assert s["dominates"]


def test_generating_functions():
    assert blockpoly.ward_form(2) == "x^4(2x - 3)/((x - 1)^2(2x - 1))"
    coeffs = blockpoly.series(2, 8)
    assert coeffs[6] == 25
    num, den = blockpoly.ogf(1)
    assert num == [0, 0, -1] and den == [-1, 1]


def test_congruences_and_suites():
    assert blockpoly.is_prime(199)
    assert all(blockpoly.check_congruences(13).values())
    results = blockpoly.verify("recurrence", 20)
    assert results[0]["passed"]


def test_crosscheck(tmp_path):
    f = tmp_path / "b.txt"
    f.write_text("0 1\n1 1\n2 2\n3 5\n4 15\n")
    assert blockpoly.crosscheck(str(f), "bell")["agree"]
    r = blockpoly.crosscheck(str(f), "dtotal")
    assert not r["agree"] and r["mismatch_index"] == 1
