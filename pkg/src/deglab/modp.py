"""Reduction of rational self-maps modulo primes and mod-p degree
sequences, for the desk-scale study of how deg(f^n) behaves in finite
characteristic: always <= the characteristic-zero degree, sometimes
strictly smaller once extra common factors appear mod p.

Bad reduction is only declared on provable degeneracies: a vanishing
coordinate, linearly dependent coordinates, or collapse to a constant
map.  A fruitless Jacobian witness search is recorded as a warning, not
an error: in characteristic p the Jacobian criterion is one-sided
(Frobenius-type maps are dominant with identically zero Jacobian).
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import intpoly
from .errors import BadReduction, BudgetExceeded
from .intpoly import PrimeFieldDomain
from .projmaps import DegreeSequence, degree_sequence, dyndeg_estimate
from .roots import nthroot_bounds

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(p):
    if p < 2:
        return False
    if p in _SMALL_PRIMES:
        return True
    from .roots import _is_probable_prime
    return _is_probable_prime(p)


class HomPolyModP:
    """Homogeneous polynomial over GF(p); coefficients stored in 1..p-1."""

    __slots__ = ("p", "num_vars", "degree", "terms")

    def __init__(self, p, num_vars, terms, degree=None):
        clean = {}
        for e, c in terms.items():
            c = c % p
            if c:
                clean[tuple(e)] = c
        if clean:
            degrees = {sum(e) for e in clean}
            if len(degrees) != 1:
                raise ValueError("not homogeneous")
            degree = degrees.pop()
        elif degree is None:
            raise ValueError("zero polynomial needs a declared degree")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("HomPolyModP is immutable")

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, HomPolyModP) and self.p == other.p
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.p, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"HomPolyModP(p={self.p}, deg={self.degree}, {self.terms})"


class MapModP:
    """Self-map of P^N over GF(p), coordinates coprime and monic-normalized."""

    __slots__ = ("p", "dim_n", "coords", "dominance_certified", "origin_id")

    def __init__(self, p, coords, dominance_certified=False, origin_id=None):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "dim_n", coords[0].num_vars - 1)
        object.__setattr__(self, "coords", tuple(coords))
        object.__setattr__(self, "dominance_certified", dominance_certified)
        object.__setattr__(self, "origin_id", origin_id)

    def __setattr__(self, *_):
        raise AttributeError("MapModP is immutable")

    @property
    def degree(self):
        for c in self.coords:
            if not c.is_zero:
                return c.degree
        raise BadReduction(self.p, "zero map")


def _normalize_mod_p(p, raws, nv):
    """Divide out the common polynomial factor and make the first nonzero
    coordinate monic in the lex-largest monomial."""
    dom = PrimeFieldDomain(p)
    nonzero = [r for r in raws if r]
    g = intpoly.p_gcd_list(dom, nonzero, nv)
    if g and sum(max(g)) > 0:
        raws = [intpoly.p_divexact(dom, r, g) if r else r for r in raws]
    for r in raws:
        if r:
            lead = r[max(r)]
            if lead != 1:
                inv = pow(lead, p - 2, p)
                raws = [intpoly.p_scalar_mul(dom, inv, r2) for r2 in raws]
            break
    return raws


def _coords_linearly_dependent(p, raws):
    """Exact rank test of the coefficient matrix over GF(p)."""
    monos = sorted({e for r in raws for e in r})
    cols = {e: i for i, e in enumerate(monos)}
    rows = [[0] * len(monos) for _ in raws]
    for i, r in enumerate(raws):
        for e, c in r.items():
            rows[i][cols[e]] = c
    rank = 0
    m = [row[:] for row in rows]
    ncols = len(monos)
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [(v - factor * w) % p for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank < len(raws)


def _jacobian_witness(p, raws, nv, trials, seed):
    """Search for a point where the dehomogenized Jacobian has full rank."""
    dom = PrimeFieldDomain(p)
    k0 = next(i for i, r in enumerate(raws) if r)
    denom = raws[k0]
    numerators = [r for i, r in enumerate(raws) if i != k0]
    entries = []
    for num in numerators:
        row = []
        for j in range(nv - 1):
            dn = intpoly.p_derivative(dom, num, j)
            dd = intpoly.p_derivative(dom, denom, j)
            row.append(intpoly.p_sub(dom, intpoly.p_mul(dom, denom, dn),
                                     intpoly.p_mul(dom, num, dd)))
        entries.append(row)
    rng = random.Random(seed)
    n = len(entries)
    exhaustive = p ** (nv - 1) <= 512
    points = []
    if exhaustive:
        def gen(prefix):
            if len(prefix) == nv - 1:
                points.append(list(prefix) + [1])
                return
            for v in range(p):
                gen(prefix + [v])
        gen([])
    else:
        points = [[rng.randrange(p) for _ in range(nv - 1)] + [1]
                  for _ in range(trials)]
    for pt in points:
        mat = [[intpoly.p_eval_mod(e, pt, p) for e in row] for row in entries]
        if _det_mod_p(mat, p):
            return True
    return False


def _det_mod_p(mat, p):
    n = len(mat)
    m = [row[:] for row in mat]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, n):
            if m[r][col]:
                factor = (m[r][col] * inv) % p
                m[r] = [(v - factor * w) % p for v, w in zip(m[r], m[col])]
    return det % p


def reduce_map(f, p, witness_trials=64, seed=0):
    """Reduce a characteristic-zero map mod p.

    Raises BadReduction when a coordinate vanishes identically, the
    coordinates become linearly dependent, or the normalized map is
    constant.  Returns a MapModP whose dominance_certified flag records
    whether a Jacobian witness was found.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    nv = f.dim_n + 1
    raws = []
    for i, c in enumerate(f.coords):
        raw = {e: v % p for e, v in c.terms.items() if v % p}
        if not raw and not c.is_zero:
            raise BadReduction(p, f"coordinate {i} vanishes mod {p}")
        raws.append(raw)
    raws = _normalize_mod_p(p, raws, nv)
    degree = max(sum(e) for r in raws if r for e in r)
    if degree == 0:
        raise BadReduction(p, "map collapses to a constant")
    if _coords_linearly_dependent(p, raws):
        raise BadReduction(p, "coordinates linearly dependent mod p "
                              "(image inside a hyperplane)")
    certified = _jacobian_witness(p, raws, nv, witness_trials, seed)
    coords = [HomPolyModP(p, nv, r, degree) for r in raws]
    return MapModP(p, coords, dominance_certified=certified,
                   origin_id=f.map_id())


def _compose_mod_p(f, g):
    dom = PrimeFieldDomain(f.p)
    nv = f.dim_n + 1
    subs = [c.terms for c in g.coords]
    raws = [intpoly.p_substitute(dom, c.terms, subs, nv) for c in f.coords]
    if not any(raws):
        raise BadReduction(f.p, "composition vanishes identically mod p")
    raws = _normalize_mod_p(f.p, raws, nv)
    degree = max(sum(e) for r in raws if r for e in r)
    coords = [HomPolyModP(f.p, nv, r, degree) for r in raws]
    return MapModP(f.p, coords, dominance_certified=f.dominance_certified,
                   origin_id=f.origin_id)


@dataclass(frozen=True)
class ModPDegreeReport:
    p: int
    degrees: tuple
    char0_degrees: tuple
    delta_p_upper: Fraction
    char0_delta_upper: Fraction
    dominance_certified: bool

    def __post_init__(self):
        for dp, d0 in zip(self.degrees, self.char0_degrees):
            if dp > d0:
                raise ArithmeticError(
                    f"mod-{self.p} degree {dp} exceeds char-0 degree {d0} "
                    "(bug)")


def degree_sequence_mod_p(f, p, n_max, char0=None,
                          degree_cap=None, bit_budget=None, seed=0):
    """Degree sequence of the mod-p reduction, paired with the char-0 one.

    ``char0`` may pass a precomputed characteristic-zero DegreeSequence
    to avoid recomputation across primes.
    """
    kwargs = {}
    if degree_cap is not None:
        kwargs["degree_cap"] = degree_cap
    if bit_budget is not None:
        kwargs["bit_budget"] = bit_budget
    if char0 is None:
        try:
            char0 = degree_sequence(f, n_max, **kwargs)
        except BudgetExceeded as exc:
            char0 = exc.partial
    fp = reduce_map(f, p, seed=seed)
    degrees = [fp.degree]
    power = fp
    cap = degree_cap if degree_cap is not None else max(char0.degrees) + 1
    for _ in range(2, min(n_max, len(char0.degrees)) + 1):
        power = _compose_mod_p(fp, power)
        if power.degree > cap:
            raise BudgetExceeded(
                f"mod-{p} degree cap hit", partial=tuple(degrees))
        degrees.append(power.degree)
    deltas = _upper_bound(degrees)
    return ModPDegreeReport(
        p=p,
        degrees=tuple(degrees),
        char0_degrees=tuple(char0.degrees[:len(degrees)]),
        delta_p_upper=deltas,
        char0_delta_upper=_upper_bound(char0.degrees),
        dominance_certified=fp.dominance_certified,
    )


def _upper_bound(degrees):
    best = None
    for n, d in enumerate(degrees, start=1):
        hi = nthroot_bounds(Fraction(d), n)[1]
        best = hi if best is None else min(best, hi)
    return best


@dataclass(frozen=True)
class DynDegComparison:
    map_id: str
    char0_degrees: tuple
    char0_upper: Fraction
    char0_extrapolated: float
    rows: tuple                    # per-prime ModPDegreeReport or BadReduction info
    warnings: tuple


def compare_dyndeg(f, primes, n_max, degree_cap=None, bit_budget=None,
                   seed=0):
    """Per-prime degree sequences and dynamical-degree upper bounds next
    to the characteristic-zero values.  deg(f_p^n) <= deg(f^n) is
    asserted for every computed entry; BadReduction at a prime becomes a
    row of the table, not a failure."""
    kwargs = {}
    if degree_cap is not None:
        kwargs["degree_cap"] = degree_cap
    if bit_budget is not None:
        kwargs["bit_budget"] = bit_budget
    try:
        char0 = degree_sequence(f, n_max, **kwargs)
    except BudgetExceeded as exc:
        char0 = exc.partial
    est = dyndeg_estimate(char0)
    rows = []
    warnings = []
    for p in primes:
        try:
            rep = degree_sequence_mod_p(f, p, n_max, char0=char0,
                                        degree_cap=degree_cap, seed=seed)
        except BadReduction as exc:
            rows.append({"p": p, "bad_reduction": exc.reason})
            continue
        if not rep.dominance_certified:
            warnings.append(
                f"p={p}: no Jacobian witness found (inseparable or "
                "non-dominant reduction; verdict left open)")
        rows.append(rep)
    return DynDegComparison(
        map_id=f.map_id(),
        char0_degrees=char0.degrees,
        char0_upper=est.certified_upper,
        char0_extrapolated=est.extrapolated,
        rows=tuple(rows),
        warnings=tuple(warnings),
    )
