"""Monomial self-maps of P^N through their integer exponent matrices.

The torus map x_i -> prod_j x_j^(A_ij) homogenizes to a self-map of P^N;
all of its dynamical degrees are spectral radii of exterior powers of A,
so everything here reduces to exact matrix arithmetic -- no polynomial
composition needed, which is what makes the cross-validation against the
symbolic pipeline a genuine two-route check.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconclusiveEnclosure, SingularMatrix, ToleranceNotReached
from .hompoly import HomPoly
from .matrices import (IntMatrix, RealEnclosure, exterior_power,
                       spectral_radius)
from .projmaps import RationalMapPN


class MonomialMapA:
    """Dominant monomial map encoded by a nonsingular integer matrix."""

    __slots__ = ("matrix", "name")

    def __init__(self, matrix, name=None):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        if matrix.det() == 0:
            raise SingularMatrix(
                "exponent matrix is singular; torus map not dominant")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "name", name)

    def __setattr__(self, *_):
        raise AttributeError("MonomialMapA is immutable")

    @property
    def n(self):
        return self.matrix.n

    def __repr__(self):
        return f"MonomialMapA({list(map(list, self.matrix.rows))})"


def _homogenized_exponents(matrix):
    """Exponent table of the homogenization, common factor removed.

    Returns (rows, degree) where rows has N+1 entries of length N+1:
    first the N torus coordinates, then the coordinate that restricts
    to 1 on the torus; the last column is the homogenizing variable.
    """
    n = matrix.n
    a = matrix.rows
    clear = [max(0, -min(a[i][j] for i in range(n))) for j in range(n)]
    rows = []
    for i in range(n):
        rows.append([a[i][j] + clear[j] for j in range(n)] + [0])
    rows.append(list(clear) + [0])
    degs = [sum(r) for r in rows]
    top = max(degs)
    for r, d in zip(rows, degs):
        r[n] = top - d
    common = [min(r[j] for r in rows) for j in range(n + 1)]
    for r in rows:
        for j in range(n + 1):
            r[j] -= common[j]
    return rows, top - sum(common)


def homogenize(m, var_names=None):
    """The self-map of P^N restricting to the torus map of the matrix."""
    rows, _ = _homogenized_exponents(m.matrix)
    nv = m.n + 1
    coords = [HomPoly.monomial(r) for r in rows]
    return RationalMapPN(coords, var_names=var_names,
                         name=m.name or "monomial")


def degree_of_power(m, n):
    """deg of the homogenization of A^n -- the matrix route to deg(f^n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _, deg = _homogenized_exponents(m.matrix ** n)
    return deg


@dataclass(frozen=True)
class DegreeVector:
    """delta_0..delta_N as enclosures plus the exact topological degree."""

    deltas: tuple                  # RealEnclosure, length N+1
    topological: int

    def __post_init__(self):
        if self.deltas[0] != RealEnclosure.exact(1):
            raise ValueError("delta_0 must be exactly 1")
        if not self.deltas[-1].contains(Fraction(self.topological)):
            raise ArithmeticError(
                "delta_N enclosure misses |det A| (bug)")


def dynamical_degrees(m, tol=Fraction(1, 10 ** 8)):
    """All dynamical degrees of the monomial map: delta_k is the spectral
    radius of the k-th exterior power of A; delta_N collapses to the
    exact topological degree |det A|."""
    a = m.matrix
    n = a.n
    topo = abs(a.det())
    deltas = [RealEnclosure.exact(1)]
    partial_error = None
    for k in range(1, n + 1):
        try:
            enc = spectral_radius(exterior_power(a, k), tol)
        except ToleranceNotReached as exc:
            enc = exc.best
            partial_error = exc
        deltas.append(enc)
    exact_top = RealEnclosure.exact(topo)
    deltas[-1] = deltas[-1].intersect(exact_top)
    vec = DegreeVector(deltas=tuple(deltas), topological=topo)
    if partial_error is not None:
        raise ToleranceNotReached(str(partial_error), best=vec)
    return vec


@dataclass(frozen=True)
class LogConcavityEntry:
    index: int                     # the middle index i
    verdict: str                   # "holds" | "fails" | "inconclusive"
    lhs: RealEnclosure             # delta_{i-1} * delta_{i+1}
    rhs: RealEnclosure             # delta_i^2


@dataclass(frozen=True)
class LogConcavityReport:
    entries: tuple
    peak_index: int
    all_hold: bool

    @property
    def inconclusive_count(self):
        return sum(1 for e in self.entries if e.verdict == "inconclusive")


def check_log_concavity(vec, strict=True):
    """Certified check of delta_{i-1} * delta_{i+1} <= delta_i^2.

    Verdicts use outer/inner enclosure bounds so they are never wrong;
    with strict=True an undecidable comparison raises
    InconclusiveEnclosure instead of appearing in the report.
    """
    deltas = vec.deltas
    entries = []
    for i in range(1, len(deltas) - 1):
        lhs = deltas[i - 1].mul_nonneg(deltas[i + 1])
        rhs = deltas[i].square_nonneg()
        if lhs.upper <= rhs.lower:
            verdict = "holds"
        elif lhs.lower > rhs.upper:
            verdict = "fails"
        else:
            verdict = "inconclusive"
            if strict:
                raise InconclusiveEnclosure(
                    f"cannot decide log-concavity at index {i}: "
                    f"lhs in {lhs.as_floats()}, rhs in {rhs.as_floats()}")
        entries.append(LogConcavityEntry(i, verdict, lhs, rhs))
    mids = [e.midpoint() for e in deltas]
    peak = max(range(len(mids)), key=lambda i: (mids[i], -i))
    return LogConcavityReport(
        entries=tuple(entries),
        peak_index=peak,
        all_hold=all(e.verdict == "holds" for e in entries),
    )
