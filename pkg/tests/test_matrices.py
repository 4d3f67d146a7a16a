"""Exact matrix layer: characteristic polynomials, exterior powers,
certified spectral radius enclosures against a float eigenvalue oracle."""

import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from deglab.errors import BadK
from deglab.matrices import (IntMatrix, RealEnclosure, char_poly,
                             exterior_power, spectral_radius)


def test_char_poly_known():
    assert char_poly(IntMatrix([[2, 1], [1, 1]])) == [1, -3, 1]
    assert char_poly(IntMatrix.identity(3)) == [1, -3, 3, -1]
    assert char_poly(IntMatrix([[0, 1], [1, 0]])) == [1, 0, -1]


def test_cayley_hamilton_up_to_4():
    rng = random.Random(11)
    for n in (2, 3, 4):
        for _ in range(8):
            a = IntMatrix([[rng.randint(-4, 4) for _ in range(n)]
                           for _ in range(n)])
            cp = char_poly(a)
            acc = [[0] * n for _ in range(n)]
            for i, c in enumerate(cp):
                power = a ** (n - i)
                for r in range(n):
                    for s in range(n):
                        acc[r][s] += c * power.rows[r][s]
            assert all(v == 0 for row in acc for v in row)


def test_exterior_power_shapes_and_identities():
    a = IntMatrix([[2, 1], [1, 1]])
    assert exterior_power(a, 2).rows == ((1,),)
    assert exterior_power(a, 1) == a
    i3 = IntMatrix.identity(3)
    assert exterior_power(i3, 2) == i3
    with pytest.raises(BadK):
        exterior_power(a, 3)
    with pytest.raises(BadK):
        exterior_power(a, 0)


def test_exterior_power_is_multiplicative():
    rng = random.Random(5)
    for _ in range(6):
        a = IntMatrix([[rng.randint(-3, 3) for _ in range(3)]
                       for _ in range(3)])
        b = IntMatrix([[rng.randint(-3, 3) for _ in range(3)]
                       for _ in range(3)])
        for k in (1, 2, 3):
            assert exterior_power(a * b, k) == \
                exterior_power(a, k) * exterior_power(b, k)


def test_compound_trace_matches_char_coefficients():
    # trace of the k-th compound is the k-th elementary symmetric
    # function of the eigenvalues, i.e. (-1)^k * char coefficient
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(6):
            a = IntMatrix([[rng.randint(-3, 3) for _ in range(n)]
                           for _ in range(n)])
            cp = char_poly(a)
            for k in range(1, n + 1):
                ek = (-1) ** k * cp[k]
                assert exterior_power(a, k).trace() == ek


def test_spectral_radius_examples():
    tol = Fraction(1, 10 ** 6)
    enc = spectral_radius(IntMatrix([[2, 1], [1, 1]]), tol)
    golden = (3 + 5 ** 0.5) / 2
    lo, hi = enc.as_floats()
    assert lo - 1e-12 <= golden <= hi + 1e-12
    assert enc.width <= tol

    assert spectral_radius(IntMatrix.identity(4), tol) == \
        RealEnclosure.exact(1)
    enc = spectral_radius(IntMatrix([[0, 1], [-1, 0]]), tol)
    assert enc.contains(1) and enc.width <= tol


def test_spectral_radius_vs_float_oracle():
    rng = random.Random(13)
    tol = Fraction(1, 10 ** 9)
    for n in (2, 3):
        for _ in range(15):
            a = IntMatrix([[rng.randint(-5, 5) for _ in range(n)]
                           for _ in range(n)])
            enc = spectral_radius(a, tol)
            oracle = max(abs(v) for v in
                         np.linalg.eigvals(np.array(a.rows, dtype=float)))
            lo, hi = enc.as_floats()
            assert lo - 1e-9 <= oracle <= hi + 1e-9, (a.rows, oracle, enc)


def test_enclosure_arithmetic():
    a = RealEnclosure(Fraction(1), Fraction(2))
    b = RealEnclosure(Fraction(3), Fraction(4))
    prod = a.mul_nonneg(b)
    assert prod.lower == 3 and prod.upper == 8
    assert a.square_nonneg().upper == 4
    with pytest.raises(ValueError):
        RealEnclosure(Fraction(2), Fraction(1))
    with pytest.raises(ArithmeticError):
        a.intersect(b)
