"""Exact integer matrices: characteristic polynomial, exterior powers,
and certified spectral-radius enclosures.

The spectral radius is sandwiched between the trace lower bound
(|tr(A^m)|/n)^(1/m) and the row-sum norm upper bound ||A^m||^(1/m) with
m doubling; when the sandwich stalls (complex dominant eigenvalues or a
tight tolerance) the enclosure is finished off by exact root-modulus
isolation on the characteristic polynomial.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BadK, SingularMatrix, ToleranceNotReached
from .roots import det_int, max_root_modulus, nthroot_bounds


class IntMatrix:
    """Immutable square matrix with integer entries."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *_):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.rows))})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, IntMatrix) or other.n != self.n:
            return NotImplemented
        bt = tuple(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col))
                                     for col in bt) for row in self.rows))

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative matrix power")
        result = IntMatrix.identity(self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def add_scalar_diag(self, c):
        return IntMatrix(tuple(tuple(v + (c if i == j else 0)
                                     for j, v in enumerate(row))
                               for i, row in enumerate(self.rows)))

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.n))

    def det(self):
        return det_int(self.rows)

    def max_abs_row_sum(self):
        return max(sum(abs(v) for v in row) for row in self.rows)


def char_poly(a):
    """Monic characteristic polynomial, descending coefficients.

    Fraddeev-LeVerrier recursion; every division is by a known integer
    factor, so the computation stays in ZZ.
    """
    n = a.n
    coeffs = [1]
    m = a
    for k in range(1, n + 1):
        ck = -m.trace()
        if ck % k:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        ck //= k
        coeffs.append(ck)
        if k < n:
            m = a * m.add_scalar_diag(ck)
    return coeffs


def exterior_power(a, k):
    """Compound matrix of k x k minors, indexed by lex-sorted k-subsets."""
    n = a.n
    if not 1 <= k <= n:
        raise BadK(f"k={k} outside 1..{n}")
    if k == 1:
        return a
    subsets = list(combinations(range(n), k))
    rows = []
    for ri in subsets:
        row = []
        for ci in subsets:
            minor = [[a.rows[i][j] for j in ci] for i in ri]
            row.append(det_int(minor))
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# enclosures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RealEnclosure:
    """Rational interval [lower, upper] certified to contain a real value."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower > upper")

    @classmethod
    def exact(cls, v):
        v = Fraction(v)
        return cls(v, v)

    @property
    def width(self):
        return self.upper - self.lower

    @property
    def is_exact(self):
        return self.lower == self.upper

    def midpoint(self):
        return float((self.lower + self.upper) / 2)

    def contains(self, v):
        return self.lower <= v <= self.upper

    def mul_nonneg(self, other):
        """Interval product assuming both endpoints are >= 0."""
        return RealEnclosure(max(self.lower, 0) * max(other.lower, 0),
                             self.upper * other.upper)

    def square_nonneg(self):
        return self.mul_nonneg(self)

    def intersect(self, other):
        lo = max(self.lower, other.lower)
        hi = min(self.upper, other.upper)
        if lo > hi:
            raise ArithmeticError("disjoint enclosures of the same value")
        return RealEnclosure(lo, hi)

    def as_floats(self):
        return float(self.lower), float(self.upper)


def spectral_radius(a, tol, norm_cap=64):
    """RealEnclosure of the spectral radius of an integer matrix.

    ``tol`` is the requested enclosure width; ``norm_cap`` bounds the
    power used in the norm/trace sandwich before falling back to exact
    root isolation on the characteristic polynomial.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = a.n
    lo = Fraction(0)
    hi = None
    m = 1
    power = a
    while m <= norm_cap:
        hi_m = nthroot_bounds(Fraction(power.max_abs_row_sum()), m)[1]
        hi = hi_m if hi is None else min(hi, hi_m)
        lo_m = nthroot_bounds(Fraction(abs(power.trace()), n), m)[0]
        lo = max(lo, lo_m)
        if hi - lo <= tol:
            return RealEnclosure(lo, hi)
        if hi == 0:
            return RealEnclosure(Fraction(0), Fraction(0))
        m *= 2
        if m <= norm_cap:
            power = power * power
    rlo, rhi = max_root_modulus(list(reversed(char_poly(a))), tol)
    lo = max(lo, rlo)
    hi = min(hi, rhi)
    if lo > hi:
        raise ArithmeticError("sandwich and root bounds disagree (bug)")
    enc = RealEnclosure(lo, hi)
    if enc.width > tol:
        raise ToleranceNotReached(
            f"spectral radius width {float(enc.width):.3g} > tol", best=enc)
    return enc


def require_nonsingular(a):
    if a.det() == 0:
        raise SingularMatrix("matrix has determinant zero")
    return a
