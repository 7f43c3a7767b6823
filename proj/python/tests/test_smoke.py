from fractions import Fraction

import pytest

import octodp


def test_valuation():
    assert octodp.valuation(250, 5) == 3
    assert octodp.valuation(Fraction(7, 25), 5) == -2
    assert octodp.valuation(0, 5) == float("inf")
    with pytest.raises(octodp.PreconditionError):
        octodp.valuation(3, 4)


def test_newton_polygon():
    assert octodp.newton_root_valuations([3, 1, 0, 0]) == ["0", "1", "2"]
    assert octodp.newton_root_valuations([None, 1, 0]) == ["1", "inf"]


def test_coefficients_sum_to_zero():
    c = octodp.coefficients([0, 1, 2, 3, 4, 5])
    assert c["e"] == 864
    assert sum(c.values()) == 0
    assert octodp.verify_parametrization("0,1,2,3,4,5")


def test_inadmissible_moduli():
    with pytest.raises(octodp.PreconditionError, match="d1-d2"):
        octodp.classify([1, 1, 2, 3, 4, 5])


def test_classify_stable_example():
    r = octodp.classify("2377,-2375,1240,2385,2425,2625")
    assert r["type"] == "(aab)"
    assert r["statistic"] == "{[2210]^1, [2220]^4, [2221]^8, [4201]^12, [4210]^2}"


def test_catalog_entry_smooth():
    r = octodp.classify("aaaa-1", trees=True)
    assert r["smoothness"]["triangulation_class"] == 1
    assert r["distinct_tropical_lines"]
    assert len(r["trees"]) == 27


def test_lines_and_graph():
    census = octodp.lines([0, 1, 2, 3, 4, 5])
    assert len(census["lines"]) == 27
    assert census["incident_pairs"] == 135
    assert census["schlafli"]
    assert octodp.schlafli_dot("0,1,2,3,4,5").count("--") == 135


def test_triangulations():
    t = octodp.triangulations()
    assert (t["regular_triangulations"], t["orbits"]) == (70, 14)
    assert (t["unimodular_triangulations"], t["unimodular_orbits"]) == (53, 10)


def test_blowdown():
    r = octodp.blowdown([Fraction(1, 2), 3, -7, 11, 2, Fraction(-5, 3)])
    assert r["pass"]


def test_sample_deterministic():
    a = octodp.sample("smooth", 60, seed=4, threads=2)
    b = octodp.sample("smooth", 60, seed=4, threads=1)
    assert a == b
    assert all(f["classification"]["smoothness"]["tropically_smooth"] for f in a)


def test_verify_subset():
    results = octodp.verify([4, 12])
    assert [r[0] for r in results] == [4, 12]
    assert all(r[2] for r in results)
