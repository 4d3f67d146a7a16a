"""Monomial maps: homogenization conventions, matrix-vs-symbolic degree
cross-validation, dynamical degrees, log-concavity."""

import random
from fractions import Fraction

import pytest

from deglab.errors import SingularMatrix
from deglab.matrices import IntMatrix
from deglab.monomial import (MonomialMapA, check_log_concavity,
                             degree_of_power, dynamical_degrees, homogenize)
from deglab.parsing import parse_homogeneous
from deglab.points import ProjPointQ
from deglab.projmaps import RationalMapPN, degree_sequence


def p2map(*coords):
    return RationalMapPN(
        [parse_homogeneous(c, ["x", "y", "z"]) for c in coords],
        var_names=["x", "y", "z"])


def test_singular_matrix_rejected():
    with pytest.raises(SingularMatrix):
        MonomialMapA([[1, 1], [1, 1]])


def test_homogenize_power_and_identity():
    assert homogenize(MonomialMapA([[2, 0], [0, 2]])) == \
        p2map("x^2", "y^2", "z^2")
    assert homogenize(MonomialMapA([[1, 0], [0, 1]])) == \
        RationalMapPN.identity(2)


def test_homogenize_negative_exponent_cleared():
    g = homogenize(MonomialMapA([[1, -1], [0, 1]]))
    assert g == p2map("x*z", "y^2", "y*z")
    # verified against direct exponentiation on torus points
    for a, b in [(2, 3), (5, 7), (-2, 5), (3, -4), (9, 10)]:
        img = g.eval(ProjPointQ([a, b, 1]))
        assert img == ProjPointQ([Fraction(a, b), b, 1])


def test_degree_of_power_examples():
    assert degree_of_power(MonomialMapA([[2, 0], [0, 2]]), 3) == 8
    assert degree_of_power(MonomialMapA([[1, 0], [0, 1]]), 9) == 1
    fib = MonomialMapA([[2, 1], [1, 1]])
    seq = degree_sequence(homogenize(fib), 4, degree_cap=10 ** 9)
    assert [degree_of_power(fib, n) for n in range(1, 5)] == \
        list(seq.degrees)


def test_matrix_route_equals_symbolic_route_random():
    rng = random.Random(20)
    tried = 0
    while tried < 12:
        rows = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        if IntMatrix(rows).det() == 0:
            continue
        m = MonomialMapA(rows)
        seq = degree_sequence(homogenize(m), 6, degree_cap=10 ** 12)
        assert [degree_of_power(m, n) for n in range(1, 7)] == \
            list(seq.degrees), rows
        tried += 1


def test_matrix_route_equals_symbolic_route_dim3():
    rng = random.Random(21)
    tried = 0
    while tried < 5:
        rows = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if IntMatrix(rows).det() == 0:
            continue
        m = MonomialMapA(rows)
        seq = degree_sequence(homogenize(m), 5, degree_cap=10 ** 12)
        assert [degree_of_power(m, n) for n in range(1, 6)] == \
            list(seq.degrees), rows
        tried += 1


def test_dynamical_degrees_examples():
    dv = dynamical_degrees(MonomialMapA([[2, 1], [1, 1]]))
    golden2 = (3 + 5 ** 0.5) / 2
    lo, hi = dv.deltas[1].as_floats()
    assert lo - 1e-12 <= golden2 <= hi + 1e-12
    assert dv.deltas[2] .lower == dv.deltas[2].upper == 1
    assert dv.topological == 1

    dv2 = dynamical_degrees(MonomialMapA([[2, 0], [0, 3]]))
    assert dv2.deltas[1].lower == dv2.deltas[1].upper == 3
    assert dv2.deltas[2].lower == 6 and dv2.topological == 6

    dv3 = dynamical_degrees(MonomialMapA([[1, 0], [0, 1]]))
    assert all(d.lower == d.upper == 1 for d in dv3.deltas)


def test_dynamical_degrees_multiplicative_under_iteration():
    a = IntMatrix([[2, 1], [1, 1]])
    base = dynamical_degrees(MonomialMapA(a), Fraction(1, 10 ** 10))
    for m in (2, 3):
        power = dynamical_degrees(MonomialMapA(a ** m),
                                  Fraction(1, 10 ** 10))
        for k in range(3):
            lo = base.deltas[k].lower ** m
            hi = base.deltas[k].upper ** m
            assert power.deltas[k].lower <= hi and lo <= power.deltas[k].upper


def test_log_concavity_reports():
    rep = check_log_concavity(dynamical_degrees(MonomialMapA([[2, 0], [0, 3]])))
    assert rep.all_hold and rep.peak_index == 2
    rep2 = check_log_concavity(dynamical_degrees(MonomialMapA([[2, 1], [1, 1]])))
    assert rep2.all_hold and rep2.peak_index == 1
    rep3 = check_log_concavity(dynamical_degrees(MonomialMapA([[1, 0], [0, 1]])))
    assert rep3.all_hold  # degenerate all-equal case


def test_log_concavity_inconclusive_on_exact_irrational_equality():
    # subdominant complex pair: delta_1 * delta_3 = delta_2^2 exactly,
    # an equality of irrationals that no finite enclosure can certify
    from deglab.errors import InconclusiveEnclosure
    m = MonomialMapA([[1, 1, 0], [0, 1, 1], [1, 0, 2]])
    vec = dynamical_degrees(m, Fraction(1, 10 ** 8))
    rep = check_log_concavity(vec, strict=False)
    assert rep.inconclusive_count == 1
    with pytest.raises(InconclusiveEnclosure):
        check_log_concavity(vec, strict=True)


def test_rotation_degree_sequence_periodic():
    rot = MonomialMapA([[0, 1], [-1, 0]])
    seq = degree_sequence(homogenize(rot), 8)
    assert list(seq.degrees) == [2, 2, 2, 1, 2, 2, 2, 1]
    assert [degree_of_power(rot, n) for n in range(1, 9)] == \
        list(seq.degrees)
