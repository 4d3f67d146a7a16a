"""Dominant rational self-maps of P^N: exact composition with common-factor
cancellation, true degree sequences deg(f^n), and dynamical-degree
estimation.

Iteration always uses f^(n+1) = f o f^n with full gcd normalization at
every step; the cancellation is what makes the degree sequence correct,
and it keeps intermediate coefficients as small as the geometry allows.
"""

import enum
import hashlib
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (AllCoordinatesZero, BudgetExceeded, DegreeMismatch,
                     DimensionMismatch, IndeterminatePoint, TooShort,
                     ZeroMap)
from .hompoly import HomPoly, multi_gcd
from .parsing import parse_homogeneous
from .points import ProjPointQ
from .roots import det_int, nthroot_bounds
from . import seqfit

DEFAULT_DEGREE_CAP = 64
DEFAULT_BIT_BUDGET = 10 ** 6
_COORD_RANGE = 10 ** 6


class Dominance(enum.Enum):
    DOMINANT = "Dominant"
    NOT_DOMINANT = "NotDominant"
    INCONCLUSIVE = "Inconclusive"


def _default_vars(n_plus_1):
    if n_plus_1 <= 4:
        return tuple("xyzw"[:n_plus_1])
    return tuple(f"x{i}" for i in range(n_plus_1))


def _normalize_coords(coords):
    """Divide out the integer content gcd and the polynomial gcd; fix the
    overall sign so the first nonzero coordinate has a positive lex-leading
    coefficient.  Returns (coords, degree_drop)."""
    nonzero = [c for c in coords if not c.is_zero]
    if not nonzero:
        raise AllCoordinatesZero("every coordinate is the zero polynomial")
    original_degree = nonzero[0].degree
    for c in nonzero[1:]:
        if c.degree != original_degree:
            raise DegreeMismatch("coordinates of unequal degree")

    cont = 0
    for c in nonzero:
        cont = math.gcd(cont, c.content())
        if cont == 1:
            break
    if cont > 1:
        coords = [HomPoly(c.num_vars,
                          {e: v // cont for e, v in c.terms.items()},
                          c.degree) for c in coords]

    g = multi_gcd([c for c in coords if not c.is_zero])
    if g.degree > 0:
        coords = [c.divexact(g) for c in coords]

    for c in coords:
        if c.is_zero:
            continue
        if c.terms[max(c.terms)] < 0:
            coords = [-q for q in coords]
        break
    new_degree = next(c.degree for c in coords if not c.is_zero)
    return list(coords), original_degree - new_degree


class RationalMapPN:
    """Self-map of P^N given by N+1 coprime primitive homogeneous forms."""

    __slots__ = ("dim_n", "coords", "var_names", "name",
                 "normalization_degree_drop")

    def __init__(self, coords, var_names=None, name=None, normalize=True):
        coords = list(coords)
        nv = coords[0].num_vars
        if len(coords) != nv:
            raise DimensionMismatch(
                f"{len(coords)} coordinates for {nv} variables")
        for c in coords:
            if c.num_vars != nv:
                raise DimensionMismatch("coordinates mix variable counts")
        drop = 0
        if normalize:
            coords, drop = _normalize_coords(coords)
        if var_names is None:
            var_names = _default_vars(nv)
        object.__setattr__(self, "dim_n", nv - 1)
        object.__setattr__(self, "coords", tuple(coords))
        object.__setattr__(self, "var_names", tuple(var_names))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "normalization_degree_drop", drop)

    def __setattr__(self, *_):
        raise AttributeError("RationalMapPN is immutable")

    @classmethod
    def identity(cls, dim_n, var_names=None):
        nv = dim_n + 1
        return cls([HomPoly.variable(i, nv) for i in range(nv)],
                   var_names=var_names, name="identity")

    @property
    def degree(self):
        for c in self.coords:
            if not c.is_zero:
                return c.degree
        raise AllCoordinatesZero("zero map")

    def __eq__(self, other):
        return (isinstance(other, RationalMapPN)
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        body = ", ".join(c.to_string(self.var_names) for c in self.coords)
        return f"RationalMapPN([{body}])"

    def map_id(self):
        payload = repr(self).encode()
        return hashlib.sha256(payload).hexdigest()[:12]

    def to_document(self):
        doc = {
            "dim": self.dim_n,
            "vars": list(self.var_names),
            "coords": [c.to_string(self.var_names) for c in self.coords],
        }
        if self.name:
            doc["name"] = self.name
        return doc

    def max_coeff_bits(self):
        return max(c.max_coeff_bits() for c in self.coords)

    def eval(self, point):
        if point.dim != self.dim_n:
            raise DimensionMismatch(
                f"point on P^{point.dim}, map on P^{self.dim_n}")
        values = [c.evaluate(point.coords) for c in self.coords]
        if all(v == 0 for v in values):
            raise IndeterminatePoint(
                f"point {point!r} lies in the indeterminacy locus")
        return ProjPointQ(values)


def parse_map(document):
    """Build a RationalMapPN from a map-description document (a dict with
    keys dim, vars, coords and optional name), normalizing the result."""
    dim = int(document["dim"])
    var_names = list(document["vars"])
    coords_text = list(document["coords"])
    if len(var_names) != dim + 1:
        raise DimensionMismatch(
            f"dim {dim} needs {dim + 1} variables, got {len(var_names)}")
    if len(coords_text) != dim + 1:
        raise DimensionMismatch(
            f"dim {dim} needs {dim + 1} coordinates, got {len(coords_text)}")
    polys = [parse_homogeneous(text, var_names, coordinate_index=i)
             for i, text in enumerate(coords_text)]
    degrees = {p.degree for p in polys if not p.is_zero}
    if not degrees:
        raise AllCoordinatesZero("every coordinate parsed to zero")
    if len(degrees) > 1:
        raise DegreeMismatch(
            f"coordinates of mixed degrees {sorted(degrees)}")
    d = degrees.pop()
    polys = [HomPoly(p.num_vars, p.terms, d) if p.is_zero else p
             for p in polys]
    return RationalMapPN(polys, var_names=var_names,
                         name=document.get("name"))


def compose(f, g):
    """Normalized composition f o g; raises ZeroMap when g lands entirely
    inside the indeterminacy locus of f."""
    if f.dim_n != g.dim_n:
        raise DimensionMismatch("cannot compose maps of different dimension")
    comp = [c.compose(list(g.coords)) for c in f.coords]
    if all(c.is_zero for c in comp):
        raise ZeroMap("composition vanishes identically")
    return RationalMapPN(comp, var_names=g.var_names)


# ---------------------------------------------------------------------------
# degree sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeSequence:
    """deg(f^1..n); checks positivity and submultiplicativity on build."""

    map_id: str
    degrees: tuple

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degs)
        for d in degs:
            if d < 1:
                raise ArithmeticError(f"degree {d} < 1 (bug)")
        k = len(degs)
        for m in range(1, k + 1):
            for n in range(1, k + 1 - m):
                if degs[m + n - 1] > degs[m - 1] * degs[n - 1]:
                    raise ArithmeticError(
                        f"submultiplicativity violated at {m}+{n} (bug)")

    def __len__(self):
        return len(self.degrees)


def degree_sequence(f, n_max, degree_cap=DEFAULT_DEGREE_CAP,
                    bit_budget=DEFAULT_BIT_BUDGET):
    """deg(f^n) for n = 1..n_max via iterated normalized composition.

    Raises BudgetExceeded carrying the partial DegreeSequence when the
    degree cap or the per-coordinate coefficient bit budget is hit.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    mid = f.map_id()
    degrees = [f.degree]
    power = f
    for _ in range(2, n_max + 1):
        power = compose(f, power)
        if power.degree > degree_cap or power.max_coeff_bits() > bit_budget:
            raise BudgetExceeded(
                f"budget hit at iterate {len(degrees) + 1}: "
                f"degree {power.degree}, {power.max_coeff_bits()} coeff bits",
                partial=DegreeSequence(mid, tuple(degrees)))
        degrees.append(power.degree)
    return DegreeSequence(mid, tuple(degrees))


# ---------------------------------------------------------------------------
# dominance
# ---------------------------------------------------------------------------

def _affine_jacobian_polys(f):
    """Matrix entries D * dN_i/dx_j - N_i * dD/dx_j for the chart given by
    the first nonzero coordinate and the last variable."""
    k0 = next(i for i, c in enumerate(f.coords) if not c.is_zero)
    denom = f.coords[k0]
    numerators = [c for i, c in enumerate(f.coords) if i != k0]
    nv = f.dim_n + 1
    chart_vars = list(range(nv - 1))
    rows = []
    for num in numerators:
        row = []
        for j in chart_vars:
            row.append(denom * num.derivative(j) - num * denom.derivative(j))
        rows.append(row)
    return rows


def _sym_det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    nv = mat[0][0].num_vars
    deg = sum(mat[i][i].degree for i in range(n))
    acc = HomPoly.zero(nv, deg)
    for j in range(n):
        entry = mat[0][j]
        if entry.is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in mat[1:]]
        term = entry * _sym_det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def is_dominant(f, trials=8, seed=0):
    """One-sided dominance test.

    A single full-rank Jacobian witness at a random rational point
    certifies Dominant.  For N <= 3 the Jacobian determinant is also
    computed symbolically, which decides the question either way; for
    larger N the fallback verdict is Inconclusive.
    """
    rng = random.Random(seed)
    jac = _affine_jacobian_polys(f)
    nv = f.dim_n + 1
    for _ in range(max(1, trials)):
        pt = [rng.randint(-_COORD_RANGE, _COORD_RANGE) for _ in range(nv - 1)]
        pt = pt + [1]
        rows = [[e.evaluate(pt) for e in row] for row in jac]
        if det_int(rows) != 0:
            return Dominance.DOMINANT
    if f.dim_n <= 3:
        det = _sym_det(jac)
        if det.is_zero:
            return Dominance.NOT_DOMINANT
        return Dominance.DOMINANT
    return Dominance.INCONCLUSIVE


# ---------------------------------------------------------------------------
# dynamical degree estimation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DynamicalDegreeEstimate:
    root_estimates: tuple          # deg(f^n)^(1/n), floats
    certified_upper: Fraction      # min_n rational upper bound (Fekete)
    extrapolated: float
    n_used: int
    polynomial_growth: bool = False
    poly_degree: float = None
    ratio_cauchy: bool = False
    clamped: bool = False

    def summary(self):
        return {
            "certified_upper": float(self.certified_upper),
            "extrapolated": self.extrapolated,
            "n_used": self.n_used,
            "polynomial_growth": self.polynomial_growth,
            "poly_degree": self.poly_degree,
            "ratio_cauchy": self.ratio_cauchy,
        }


def dyndeg_estimate(seq, ratio_tol=1e-3):
    """Estimate the dynamical degree from a DegreeSequence.

    certified_upper is a true bound for every n by submultiplicativity;
    the extrapolation is Aitken acceleration of the degree ratios when
    they look Cauchy, the last root estimate otherwise, and exactly 1
    when the degrees grow polynomially.
    """
    degrees = list(seq.degrees)
    n_used = len(degrees)
    if n_used < 2:
        raise TooShort("need at least two degrees")

    roots = tuple(d ** (1.0 / n) for n, d in enumerate(degrees, start=1))
    upper = None
    for n, d in enumerate(degrees, start=1):
        hi = nthroot_bounds(Fraction(d), n)[1]
        upper = hi if upper is None else min(upper, hi)

    poly_k = seqfit.exact_poly_degree(degrees)
    polynomial_growth = poly_k is not None
    if not polynomial_growth and n_used >= 4:
        k_fit, _, max_rel = seqfit.power_fit(range(1, n_used + 1), degrees)
        if max_rel <= 0.01:
            polynomial_growth = True
            poly_k = k_fit
    ratios = [b / a for a, b in zip(degrees, degrees[1:])]
    cauchy = len(ratios) >= 3 and seqfit.tail_spread(
        ratios, min(3, len(ratios))) <= ratio_tol

    if polynomial_growth:
        extrapolated = 1.0
    elif cauchy:
        extrapolated = seqfit.aitken_extrapolate(ratios)
    else:
        extrapolated = roots[-1]

    clamped = False
    bound = float(upper) * (1 + 1e-9) + 1e-12
    if extrapolated > bound:
        extrapolated = float(upper)
        clamped = True
    return DynamicalDegreeEstimate(
        root_estimates=roots,
        certified_upper=upper,
        extrapolated=extrapolated,
        n_used=n_used,
        polynomial_growth=polynomial_growth,
        poly_degree=float(poly_k) if poly_k is not None else None,
        ratio_cauchy=cauchy,
        clamped=clamped,
    )
