"""Heights: orbits, arithmetic degrees, certified canonical heights,
preperiodicity, the growth-exponent fitter, and critical heights."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from deglab.errors import (DegreeNotPolarized, Insufficient,
                           NonpositiveHeights)
from deglab.heights import (arith_degree_estimate, canonical_height,
                            coefficient_upper_bound, critical_height_P1,
                            critical_points_P1, is_preperiodic, orbit,
                            p1_defect_bound, shibata_ell_estimate)
from deglab.parsing import parse_homogeneous
from deglab.points import ProjPointQ, weil_height
from deglab.projmaps import RationalMapPN, parse_map

SEC11 = parse_map({"dim": 2, "vars": ["x", "y", "z"],
                   "coords": ["x*y + x*z", "y*z + z^2", "z^2"]})
POWER2 = parse_map({"dim": 2, "vars": ["x", "y", "z"],
                    "coords": ["x^2", "y^2", "z^2"]})


def p1map(*coords):
    return parse_map({"dim": 1, "vars": ["x", "y"], "coords": list(coords)})


SQ = p1map("x^2", "y^2")                      # z^2
SQM1 = p1map("x^2 - y^2", "y^2")              # z^2 - 1
SQP1 = p1map("x^2 + y^2", "y^2")              # z^2 + 1
CHEB3 = p1map("x^3 - 3*x*y^2", "y^3")         # z^3 - 3z


# ---------------------------------------------------------------------------
# Weil heights and orbits
# ---------------------------------------------------------------------------

def test_weil_height_examples():
    assert weil_height(ProjPointQ([1, 0, 1])) == 0.0
    assert weil_height(ProjPointQ([4, 6, 10])) == math.log(5)
    n = 7
    assert math.isclose(weil_height(ProjPointQ([math.factorial(n), n, 1])),
                        math.log(math.factorial(n)), rel_tol=1e-14)


@given(st.integers(-10 ** 6, 10 ** 6).filter(lambda c: c != 0),
       st.tuples(st.integers(-99, 99), st.integers(-99, 99),
                 st.integers(-99, 99)).filter(lambda t: any(t)))
@settings(max_examples=60, deadline=None)
def test_weil_height_scaling_invariant(c, coords):
    p = ProjPointQ(coords)
    q = ProjPointQ([c * v for v in coords])
    assert p == q and weil_height(p) == weil_height(q)


def test_orbit_factorial():
    rec = orbit(SEC11, ProjPointQ([1, 0, 1]), 10)
    assert rec.termination.kind == "budget"
    for n, pt in enumerate(rec.points):
        assert pt.coords == (math.factorial(n), n, 1)


def test_orbit_cycles():
    rec = orbit(POWER2, ProjPointQ([1, 1, 1]), 10)
    assert rec.termination.kind == "cycle"
    assert (rec.termination.entry, rec.termination.period) == (0, 1)
    rec2 = orbit(SQM1, ProjPointQ([0, 1]), 10)
    assert (rec2.termination.entry, rec2.termination.period) == (0, 2)


def test_orbit_indeterminate_and_budget():
    rec = orbit(SEC11, ProjPointQ([0, 1, 0]), 5)
    assert rec.termination.kind == "indeterminate"
    assert rec.termination.step == 1
    rec2 = orbit(POWER2, ProjPointQ([2, 3, 1]), 50, bit_budget=64)
    assert rec2.termination.kind == "budget"
    assert all(p.max_coeff_bits() <= 64 for p in rec2.points)


# ---------------------------------------------------------------------------
# arithmetic degree
# ---------------------------------------------------------------------------

def test_arith_degree_power_map():
    rec = orbit(POWER2, ProjPointQ([2, 3, 1]), 14)
    est = arith_degree_estimate(rec)
    assert abs(est.alpha_bar_estimate - 2.0) < 0.05
    assert est.convergence == "converged"


def test_arith_degree_preperiodic_is_one():
    rec = orbit(SQM1, ProjPointQ([0, 1]), 10)
    est = arith_degree_estimate(rec)
    assert est.alpha_bar_estimate == 1.0 and est.preperiodic


def test_arith_degree_sec11_tends_to_one():
    rec = orbit(SEC11, ProjPointQ([1, 0, 1]), 80)
    est = arith_degree_estimate(rec)
    assert est.alpha_bar_estimate < 1.12


def test_arith_degree_insufficient():
    rec = orbit(POWER2, ProjPointQ([2, 3, 1]), 3)
    with pytest.raises(Insufficient):
        arith_degree_estimate(rec)


def test_arith_degree_tail_invariance():
    # estimates from O(P) and O(f^3 P) agree within tolerance
    start = ProjPointQ([1, 0, 1])
    rec = orbit(SEC11, start, 60)
    shifted = orbit(SEC11, rec.points[3], 57)
    a1 = arith_degree_estimate(rec).alpha_bar_estimate
    a2 = arith_degree_estimate(shifted).alpha_bar_estimate
    assert abs(a1 - a2) < 0.02


# ---------------------------------------------------------------------------
# canonical heights (P^1 certification)
# ---------------------------------------------------------------------------

def test_defect_bound_certifies_height_transform():
    rng = random.Random(31)
    for f in (SQ, SQM1, SQP1, CHEB3):
        c = p1_defect_bound(f)
        d = f.degree
        for _ in range(100):
            pt = ProjPointQ([rng.randint(-10 ** 6, 10 ** 6),
                             rng.randint(1, 10 ** 6)])
            img = f.eval(pt)
            defect = weil_height(img) - d * weil_height(pt)
            assert abs(defect) <= c + 1e-9, (f, pt, defect, c)


def test_canonical_height_power_map_exact():
    ch = canonical_height(SQ, ProjPointQ([2, 1]), tol=1e-10)
    assert ch.bound_kind == "CertifiedP1"
    assert ch.error_bound <= 1e-10
    assert abs(ch.value - math.log(2)) < 1e-14


def test_canonical_height_preperiodic_zero():
    ch = canonical_height(SQM1, ProjPointQ([0, 1]), tol=1e-10)
    assert ch.value == 0.0 and ch.error_bound == 0.0


def test_canonical_height_z2plus1():
    ch = canonical_height(SQP1, ProjPointQ([0, 1]), tol=1e-8)
    assert ch.bound_kind == "CertifiedP1"
    # independently cross-checked: hhat(0) = lim log(c_n)/2^n for the
    # integer recursion c_{n+1} = c_n^2 + 1
    assert abs(ch.value - 0.20367726136974) < 1e-7
    assert ch.value - ch.error_bound > 0


def test_canonical_functional_equation():
    rng = random.Random(37)
    for f in (SQM1, SQP1):
        for _ in range(10):
            pt = ProjPointQ([rng.randint(-20, 20), rng.randint(1, 20)])
            a = canonical_height(f, pt, tol=1e-8)
            b = canonical_height(f, f.eval(pt), tol=1e-8)
            assert abs(b.value - 2 * a.value) <= \
                b.error_bound + 2 * a.error_bound + 1e-12


def test_canonical_height_empirical_kind_on_p2():
    ch = canonical_height(POWER2, ProjPointQ([2, 3, 1]), tol=1e-6)
    assert ch.bound_kind == "Empirical"
    assert abs(ch.value - math.log(3)) < 1e-6  # h(f^n P)/2^n is exactly log 3
    ch2 = canonical_height(POWER2, ProjPointQ([2, 3, 1]), tol=1e-6,
                           empirical_lower=False)
    assert ch2.bound_kind == "CoefficientUpper"


def test_canonical_height_rejects_unpolarized():
    ident = RationalMapPN.identity(1)
    with pytest.raises(DegreeNotPolarized):
        canonical_height(ident, ProjPointQ([2, 1]))


# ---------------------------------------------------------------------------
# preperiodicity
# ---------------------------------------------------------------------------

def test_is_preperiodic_verdicts():
    v = is_preperiodic(SQM1, ProjPointQ([0, 1]))
    assert v.kind == "Preperiodic" and (v.entry, v.period) == (0, 2)
    v2 = is_preperiodic(SQP1, ProjPointQ([0, 1]))
    assert v2.kind == "HeightEscape"
    assert v2.canonical.value - v2.canonical.error_bound > 0
    v3 = is_preperiodic(RationalMapPN.identity(1), ProjPointQ([3, 7]))
    assert v3.kind == "Preperiodic" and (v3.entry, v3.period) == (0, 1)


def test_preperiodic_iff_zero_height_on_samples():
    # cycles give zero canonical height; certified positive height gives
    # HeightEscape
    for z0 in range(-2, 3):
        pt = ProjPointQ([z0, 1])
        v = is_preperiodic(SQM1, pt)
        ch = canonical_height(SQM1, pt, tol=1e-6)
        if v.kind == "Preperiodic":
            assert ch.value <= ch.error_bound
        elif v.kind == "HeightEscape":
            assert ch.value - ch.error_bound > 0


# ---------------------------------------------------------------------------
# growth-exponent fitter
# ---------------------------------------------------------------------------

def test_shibata_synthetic_calibration():
    for ell in (0, 1, 2):
        for delta in (1, 2):
            series = [0.0] + [n ** ell * float(delta) ** n
                              for n in range(1, 61)]
            est = shibata_ell_estimate(series, delta, window=(10, 60))
            assert abs(est.ell_estimate - ell) < 0.05, (ell, delta, est)
            assert not est.nonpower_flag


def test_shibata_logfactorial_regime():
    series = [math.lgamma(n + 1) for n in range(61)]
    est = shibata_ell_estimate(series, 1, window=(10, 60))
    assert 1.0 <= est.ell_estimate <= 1.5
    assert est.nonpower_flag  # n log n is not a clean power


def test_shibata_on_orbit_record():
    rec = orbit(POWER2, ProjPointQ([2, 3, 1]), 16)
    est = shibata_ell_estimate(rec, 2, window=(4, 16))
    assert abs(est.ell_estimate) < 0.05


def test_shibata_errors():
    with pytest.raises(NonpositiveHeights):
        shibata_ell_estimate([0.0] * 30, 1, window=(5, 25))
    with pytest.raises(Insufficient):
        shibata_ell_estimate([0.0, 1.0, 2.0], 1, window=(1, 2))
    with pytest.raises(DegreeNotPolarized):
        shibata_ell_estimate([1.0] * 20, 0.5)


# ---------------------------------------------------------------------------
# critical points / critical height
# ---------------------------------------------------------------------------

def test_critical_points_examples():
    pts, resid = critical_points_P1(SQ)
    assert {p.coords for p, _ in pts} == {(0, 1), (1, 0)} and resid == []
    pts2, resid2 = critical_points_P1(p1map("x^2 - 7*y^2", "y^2"))
    assert {p.coords for p, _ in pts2} == {(0, 1), (1, 0)} and resid2 == []
    pts3, resid3 = critical_points_P1(CHEB3)
    assert {p.coords: m for p, m in pts3} == \
        {(1, 0): 2, (1, 1): 1, (1, -1): 1}
    assert resid3 == []


def test_critical_points_irrational_reported_by_degree():
    # z^3 - 3z^2...: pick a cubic with irrational critical points:
    # f = z^3 + z has critical points at z^2 = -1/3
    f = p1map("x^3 + x*y^2", "y^3")
    pts, resid = critical_points_P1(f)
    assert {p.coords for p, _ in pts} == {(1, 0)}
    assert resid == [2]


def test_critical_heights():
    assert critical_height_P1(SQM1).value == 0.0
    assert critical_height_P1(SQ).value == 0.0
    ch = critical_height_P1(SQP1)
    assert abs(ch.value - 0.20367726136974) < 1e-6
    assert not ch.partial and not ch.pcf_consistent
    cheb = critical_height_P1(CHEB3)
    assert cheb.value <= cheb.error_bound and cheb.pcf_consistent
