"""HomPoly operations and the polynomial text grammar."""

import pytest
from hypothesis import given, settings, strategies as st

from deglab.errors import (ArityMismatch, DegreeMismatch, NotHomogeneous,
                           PolySyntaxError, ZeroPolynomial)
from deglab.hompoly import HomPoly, content, multi_gcd, poly_compose
from deglab.parsing import parse_homogeneous, parse_point

X, Y, Z = (HomPoly.variable(i, 3) for i in range(3))


def test_add_doubling_and_cancellation():
    xy = X * Y
    assert (xy + xy).terms == {(1, 1, 0): 2}
    diff = X ** 2 + (-(X ** 2))
    assert diff.is_zero and diff.degree == 2


def test_add_mismatches():
    with pytest.raises(DegreeMismatch):
        X + X ** 2
    with pytest.raises(ArityMismatch):
        X + HomPoly.variable(0, 2)


def test_mul_against_binomial():
    assert (X + Y) * (X - Y) == X ** 2 - Y ** 2
    assert (X + Z) ** 2 == X ** 2 + 2 * X * Z + Z ** 2


def test_mul_zero_absorbs_with_degree():
    zero = HomPoly.zero(3, 2)
    prod = zero * (X * Y)
    assert prod.is_zero and prod.degree == 4


def test_compose_examples():
    assert X.compose([X ** 2, Y ** 2, Z ** 2]) == X ** 2
    assert (X * Y).compose([X ** 2, Y ** 2, Z ** 2]) == X ** 2 * Y ** 2
    assert (X + Y).compose([X * Y, Y * Z, Z ** 2]) == X * Y + Y * Z


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        (X + Y).compose([X, Y ** 2, Z ** 2])
    with pytest.raises(ArityMismatch):
        X.compose([X, Y])


def test_content_examples():
    assert content(6 * X ** 2 + 4 * Y ** 2) == 2
    assert content(X ** 2) == 1
    assert content(-3 * X * Y - 9 * Z ** 2) == 3
    with pytest.raises(ZeroPolynomial):
        content(HomPoly.zero(3, 1))


def test_multi_gcd_examples():
    assert multi_gcd([X * Y, X * Z]) == X
    assert multi_gcd([X ** 2 - Y ** 2, X ** 2 + 2 * X * Y + Y ** 2]) == X + Y
    g = multi_gcd([X ** 2 + Y ** 2, Y ** 2 + Z ** 2])
    assert g.degree == 0 and g.terms == {(0, 0, 0): 1}


def test_multi_gcd_divides_and_leaves_coprime():
    a = (X + Y) * (X - Y) * 6
    b = (X + Y) * Z * 10
    c = (X + Y) * (Y + Z) * 15
    g = multi_gcd([a, b, c])
    assert g == X + Y
    reduced = [q.divexact(g) for q in (a, b, c)]
    assert multi_gcd(reduced).degree == 0


@st.composite
def small_hompolys(draw, degree):
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        e1 = draw(st.integers(0, degree))
        e2 = draw(st.integers(0, degree - e1))
        e = (e1, e2, degree - e1 - e2)
        c = draw(st.integers(-5, 5))
        if c:
            terms[e] = c
    return HomPoly(3, terms, degree)


@given(small_hompolys(2), small_hompolys(2), small_hompolys(1),
       small_hompolys(1), small_hompolys(1))
@settings(max_examples=40, deadline=None)
def test_compose_is_ring_homomorphism(p, q, s0, s1, s2):
    subst = [s0, s1, s2]
    lhs = (p * q).compose(subst)
    rhs = p.compose(subst) * q.compose(subst)
    assert lhs == rhs


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def test_parser_precedence():
    names = ["x", "y", "z"]
    assert parse_homogeneous("x*y + x*z", names) == X * Y + X * Z
    # ^ binds tighter than *
    assert parse_homogeneous("2*x^2", names) == 2 * X ** 2
    # unary minus applies to the whole power
    p = parse_homogeneous("-x^2 + y^2", names)
    assert p == Y ** 2 - X ** 2
    assert parse_homogeneous("(x + y)^2", names) == (X + Y) ** 2
    assert parse_homogeneous("  x * y+x  *z ", names) == X * Y + X * Z


def test_parser_integer_arithmetic():
    names = ["x", "y"]
    p = parse_homogeneous("2^3*x", names)
    assert p.terms == {(1, 0): 8}


def test_parser_errors_carry_position():
    with pytest.raises(PolySyntaxError) as err:
        parse_homogeneous("x + $", ["x", "y"])
    assert err.value.position == 4
    with pytest.raises(PolySyntaxError):
        parse_homogeneous("x + ", ["x", "y"])
    with pytest.raises(PolySyntaxError):
        parse_homogeneous("w + x", ["x", "y"])
    with pytest.raises(NotHomogeneous) as err2:
        parse_homogeneous("x^2 + y", ["x", "y"], coordinate_index=1)
    assert err2.value.index == 1


def test_parse_point():
    assert parse_point("1,0,1") == (1, 0, 1)
    from fractions import Fraction
    assert parse_point(" 2 , -3, 1/2") == (2, -3, Fraction(1, 2))
    with pytest.raises(PolySyntaxError):
        parse_point("1,,2")
