import math

import pytest

import maodist


def test_moments_formula():
    r = maodist.moments(100, [20] * 5, t=2)
    assert r["mode"] == "exact"
    assert math.isclose(r["mean"]["value"], 20.48, rel_tol=1e-12)
    assert math.isclose(r["variance"]["value"], 11.0490232739, rel_tol=1e-9)
    assert r["mean"]["dec"].startswith("20.48")


def test_pmf_is_normalised_and_matches_moments():
    p = maodist.pmf(30, [6] * 3, t=1)
    assert math.isclose(sum(p), 1.0, abs_tol=1e-12)
    mean = sum(k * q for k, q in enumerate(p))
    r = maodist.moments(30, [6] * 3, t=1)
    assert math.isclose(mean, r["mean"]["value"], rel_tol=1e-12)


def test_methods_agree():
    exact = maodist.moments(30, [6] * 3, t=1, method="exact")
    formula = maodist.moments(30, [6] * 3, t=1, method="formula")
    assert math.isclose(exact["variance"]["value"], formula["variance"]["value"],
                        rel_tol=1e-12)


def test_simulation_is_deterministic():
    a = maodist.simulate(25, [5] * 3, t=0, R=2000, seed=11, threads=1)
    b = maodist.simulate(25, [5] * 3, t=0, R=2000, seed=11, threads=3)
    assert a == b
    assert math.isclose(sum(a), 1.0, abs_tol=1e-12)


def test_norm_spot_value():
    v = maodist.norm(100, [20] * 5, [2])
    assert math.isclose(v["value"], 20.48, rel_tol=1e-12)


def test_diagnose_fields():
    d = maodist.diagnose(100, [20] * 5, t=5)
    assert d["regime"] == "poisson"
    assert d["delta"]["value"] > 0
    assert d["chen_stein_bound"]["value"] == pytest.approx(1.9915e-4, abs=1e-7)


def test_tail_pvalue():
    p = maodist.tail_pvalue(30, [6] * 3, t=3, kind="exactly", observed=0, side="lower")
    assert 0 < p <= 1


def test_unequal_sizes():
    r = maodist.moments(25, [3, 10, 8], t=0, method="exact")
    p0 = (22 / 25) * (15 / 25) * (17 / 25)
    assert math.isclose(r["mean"]["value"], 25 * p0, rel_tol=1e-12)
