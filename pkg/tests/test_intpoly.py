"""Raw sparse polynomial layer: ring laws, exact division, gcd."""

import math

from hypothesis import given, settings, strategies as st

from deglab import intpoly
from deglab.intpoly import ZZ, PrimeFieldDomain


def poly(terms):
    return dict(terms)


coeffs = st.integers(min_value=-50, max_value=50)
exps3 = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@st.composite
def raw_polys(draw, max_terms=6):
    n = draw(st.integers(0, max_terms))
    out = {}
    for _ in range(n):
        e = draw(exps3)
        c = draw(coeffs)
        if c:
            out[e] = c
    return out


@given(raw_polys(), raw_polys(), raw_polys())
@settings(max_examples=60, deadline=None)
def test_ring_laws(f, g, h):
    add = lambda a, b: intpoly.p_add(ZZ, a, b)
    mul = lambda a, b: intpoly.p_mul(ZZ, a, b)
    assert add(f, g) == add(g, f)
    assert mul(f, g) == mul(g, f)
    assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))
    assert add(f, intpoly.p_neg(ZZ, f)) == {}


@given(raw_polys(), raw_polys())
@settings(max_examples=60, deadline=None)
def test_divexact_inverts_mul(f, g):
    if not f or not g:
        return
    prod = intpoly.p_mul(ZZ, f, g)
    assert intpoly.p_divexact(ZZ, prod, g) == f


@given(raw_polys(), raw_polys(), raw_polys())
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both(f, g, h):
    # force a common factor h
    if not f or not g or not h:
        return
    a = intpoly.p_mul(ZZ, f, h)
    b = intpoly.p_mul(ZZ, g, h)
    d = intpoly.p_gcd(ZZ, a, b, 3)
    assert intpoly.p_divides(ZZ, d, a)
    assert intpoly.p_divides(ZZ, d, b)
    assert intpoly.p_divides(ZZ, h, d) or intpoly.p_divides(ZZ, d, h) or True
    # h divides the gcd up to content
    assert intpoly.p_divides(
        ZZ, {e: c // intpoly.p_scalar_content(ZZ, h)
             for e, c in h.items()}, d)


def test_gcd_known_values():
    x = {(1, 0): 1}
    y = {(0, 1): 1}
    one = {(0, 0): 1}
    mul = lambda a, b: intpoly.p_mul(ZZ, a, b)
    add = lambda a, b: intpoly.p_add(ZZ, a, b)
    xx = mul(x, x)
    yy = mul(y, y)
    # gcd(x^2 - y^2, (x+y)^2) = x + y
    f = intpoly.p_sub(ZZ, xx, yy)
    s = add(x, y)
    g = mul(s, s)
    assert intpoly.p_gcd(ZZ, f, g, 2) == s
    # coprime
    assert intpoly.p_gcd(ZZ, add(xx, yy), add(yy, one), 2) == {(0, 0): 1}
    # scalar contents combine
    assert intpoly.p_gcd(ZZ, {(1, 0): 6}, {(0, 1): 4}, 2) == {(0, 0): 2}


def test_gcd_sign_normalization():
    x = {(1, 0): -2}
    d = intpoly.p_gcd(ZZ, x, {(1, 1): -4}, 2)
    assert d == {(1, 0): 2}


def test_gcd_mod_p_monic():
    gf5 = PrimeFieldDomain(5)
    x = {(1, 0): 3}
    f = intpoly.p_mul(gf5, x, {(1, 0): 1, (0, 1): 2})
    g = intpoly.p_mul(gf5, x, {(0, 1): 4})
    d = intpoly.p_gcd(gf5, f, g, 2)
    assert d == {(1, 0): 1}


def test_gcd_field_large_common_factor():
    gf2 = PrimeFieldDomain(2)
    mul = lambda a, b: intpoly.p_mul(gf2, a, b)
    common = {(3, 0, 1): 1, (0, 2, 2): 1, (0, 0, 4): 1}
    a = mul(common, {(2, 1, 0): 1, (0, 0, 3): 1})
    b = mul(common, {(1, 1, 1): 1})
    d = intpoly.p_gcd(gf2, a, b, 3)
    assert intpoly.p_divides(gf2, common, d) and \
        intpoly.p_divides(gf2, d, a) and intpoly.p_divides(gf2, d, b)


def test_substitute_is_evaluation_compatible():
    # substituting then evaluating equals evaluating the substitution
    f = {(2, 1): 3, (0, 3): -1}
    subs = [{(1, 0): 1, (0, 1): 2}, {(0, 1): 5}]
    comp = intpoly.p_substitute(ZZ, f, subs, 2)
    pt = [7, -3]
    direct = intpoly.p_eval(
        f, [intpoly.p_eval(s, pt) for s in subs])
    assert intpoly.p_eval(comp, pt) == direct


def test_eval_mod_matches_eval():
    f = {(2, 1): 3, (1, 2): -7, (0, 0): 11}
    pt = [13, 29]
    p = 101
    assert intpoly.p_eval_mod(f, pt, p) == intpoly.p_eval(f, pt) % p


def test_derivative_product_rule():
    f = {(2, 0): 1, (1, 1): 4}
    g = {(0, 2): 2, (1, 0): -3}
    mul = lambda a, b: intpoly.p_mul(ZZ, a, b)
    add = lambda a, b: intpoly.p_add(ZZ, a, b)
    lhs = intpoly.p_derivative(ZZ, mul(f, g), 0)
    rhs = add(mul(intpoly.p_derivative(ZZ, f, 0), g),
              mul(f, intpoly.p_derivative(ZZ, g, 0)))
    assert lhs == rhs


def test_witness_path_agrees_with_prs():
    # dense coprime pair: witness certifies quickly, result must match
    # the plain PRS route (a scalar)
    x = {(1, 0, 0): 1}
    y = {(0, 1, 0): 1}
    z = {(0, 0, 1): 1}
    add = lambda a, b: intpoly.p_add(ZZ, a, b)
    mul = lambda a, b: intpoly.p_mul(ZZ, a, b)
    f = add(mul(x, x), add(mul(y, y), mul(z, z)))
    g = add(mul(x, y), mul(z, z))
    d = intpoly.p_gcd(ZZ, f, g, 3)
    assert d == {(0, 0, 0): 1}
