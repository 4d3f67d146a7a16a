"""Orbits and height limits: Weil heights along orbits, arithmetic-degree
estimation, canonical heights with certified error bounds on P^1,
preperiodicity verdicts, the polynomial-correction exponent fitter, and
the critical height of P^1 maps with rational critical points.

Certification policy: on P^1 the one-step height defect
|h(f(Q)) - d*h(Q)| is bounded above by an explicit coefficient bound and
below through integer cofactor identities built from the resultant, so
canonical-height error bounds are honest for every rational point.  In
higher dimension the downward half has no cheap certificate; those
bounds are labelled Empirical and the reports say so.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (DegenerateMap, DegreeNotPolarized, Insufficient,
                     IndeterminatePoint, NonpositiveHeights,
                     NotEventuallyDefined)
from .hompoly import HomPoly
from .points import ProjPointQ, weil_height
from .roots import det_int, divisors, squarefree_decomposition
from . import seqfit

HEIGHT_FLOOR = 1e-12
DEFAULT_BIT_BUDGET = 10 ** 6


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Termination:
    kind: str                  # "budget" | "indeterminate" | "cycle"
    step: int = None           # step at which an indeterminate point was hit
    entry: int = None          # cycle entry index
    period: int = None         # cycle length
    note: str = ""

    @classmethod
    def budget(cls, note):
        return cls(kind="budget", note=note)

    @classmethod
    def indeterminate(cls, step):
        return cls(kind="indeterminate", step=step)

    @classmethod
    def cycle(cls, entry, period):
        return cls(kind="cycle", entry=entry, period=period)


@dataclass(frozen=True)
class OrbitRecord:
    map_id: str
    start: ProjPointQ
    points: tuple              # P, f(P), ..., canonical representatives
    heights: tuple             # floats, parallel to points
    termination: Termination

    def __len__(self):
        return len(self.points)

    @property
    def is_preperiodic(self):
        return self.termination.kind == "cycle"

    def coord_bits(self):
        return [p.max_coeff_bits() for p in self.points]


def orbit(f, start, n_max, bit_budget=DEFAULT_BIT_BUDGET):
    """Iterate f from start with exact normalization at each step.

    Stops on the step budget, the coordinate bit budget, an exact cycle
    (canonical representatives compared), or an indeterminate point; the
    reason is recorded as data, never as an exception.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    start = start if isinstance(start, ProjPointQ) else ProjPointQ(start)
    points = [start]
    seen = {start: 0}
    termination = Termination.budget(f"n_max={n_max} reached")
    for n in range(1, n_max + 1):
        try:
            nxt = f.eval(points[-1])
        except IndeterminatePoint:
            termination = Termination.indeterminate(n)
            break
        prev = seen.get(nxt)
        if prev is not None:
            termination = Termination.cycle(prev, len(points) - prev)
            break
        if nxt.max_coeff_bits() > bit_budget:
            termination = Termination.budget(
                f"bit budget {bit_budget} exceeded at step {n}")
            break
        points.append(nxt)
        seen[nxt] = len(points) - 1
    return OrbitRecord(
        map_id=f.map_id(),
        start=start,
        points=tuple(points),
        heights=tuple(weil_height(p) for p in points),
        termination=termination,
    )


# ---------------------------------------------------------------------------
# arithmetic degree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArithmeticDegreeEstimate:
    root_series: tuple         # (n, h_n^(1/n)) for usable n >= 1
    ratio_series: tuple        # (n, h_{n+1}/h_n) for usable consecutive n
    alpha_bar_estimate: float
    convergence: str           # "converged" | "oscillating" | "insufficient"
    convergence_tol: float
    preperiodic: bool = False


def arith_degree_estimate(record, tol=0.01):
    """Limsup-style estimate of the arithmetic degree from an orbit.

    Preperiodic orbits report exactly 1 (bounded heights).  Otherwise
    alpha_bar is the max of the last third of the root estimates, a
    window statistic chosen because the limit itself is not known to
    exist in general.
    """
    usable = [(n, h) for n, h in enumerate(record.heights)
              if n >= 1 and h > HEIGHT_FLOOR]
    if record.is_preperiodic:
        return ArithmeticDegreeEstimate(
            root_series=tuple((n, h ** (1.0 / n)) for n, h in usable),
            ratio_series=(),
            alpha_bar_estimate=1.0,
            convergence="converged",
            convergence_tol=tol,
            preperiodic=True,
        )
    if len(usable) < 5:
        raise Insufficient(
            f"only {len(usable)} usable heights (need 5)")
    roots = [(n, h ** (1.0 / n)) for n, h in usable]
    by_n = dict(usable)
    ratios = [(n, by_n[n + 1] / h) for n, h in usable if n + 1 in by_n]
    window = max(1, math.ceil(len(roots) / 3))
    alpha_bar = max(v for _, v in roots[-window:])
    ratio_vals = [v for _, v in ratios]
    if len(ratio_vals) >= 3 and seqfit.tail_spread(
            ratio_vals, min(5, len(ratio_vals))) < tol:
        convergence = "converged"
    elif _oscillating(ratio_vals):
        convergence = "oscillating"
    else:
        convergence = "insufficient"
    return ArithmeticDegreeEstimate(
        root_series=tuple(roots),
        ratio_series=tuple(ratios),
        alpha_bar_estimate=alpha_bar,
        convergence=convergence,
        convergence_tol=tol,
    )


def _oscillating(vals, k=5):
    tail = vals[-k:]
    if len(tail) < 4:
        return False
    diffs = [b - a for a, b in zip(tail, tail[1:])]
    flips = sum(1 for a, b in zip(diffs, diffs[1:]) if a * b < 0)
    return flips >= len(diffs) - 1


# ---------------------------------------------------------------------------
# P^1 certification: one-step height defect bounds
# ---------------------------------------------------------------------------

def coefficient_upper_bound(f):
    """C with h(f(Q)) <= deg(f)*h(Q) + C for every rational point Q."""
    return math.log(max(c.coeff_abs_sum() for c in f.coords if not c.is_zero))


def _binary_coeff_vector(poly, degree):
    """Coefficients [a_0..a_degree] of sum a_i x^i y^(degree-i)."""
    out = [0] * (degree + 1)
    for (i, j), c in poly.terms.items():
        out[i] = c
    return out


def binary_resultant(f):
    """Res(F, G) of the coordinate forms of a P^1 map."""
    d = f.degree
    fa = _binary_coeff_vector(f.coords[0], d)
    ga = _binary_coeff_vector(f.coords[1], d)
    size = 2 * d
    rows = []
    for i in range(d):
        row = [0] * size
        for j in range(d + 1):
            row[i + j] = fa[d - j]
        rows.append(row)
    for i in range(d):
        row = [0] * size
        for j in range(d + 1):
            row[i + j] = ga[d - j]
        rows.append(row)
    return det_int(rows)


def _solve_linear_fractions(matrix, rhs):
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _cofactor_identity(f, resultant, target_var):
    """Integer forms (A, B) of degree d-1 with A*F + B*G = Res * t^(2d-1),
    t the chosen variable.  Verified symbolically before returning."""
    d = f.degree
    nv = 2
    fa, ga = f.coords
    # unknowns: coeffs of A then B, each indexed by x-exponent 0..d-1
    cols = []
    monos_a = [(i, d - 1 - i) for i in range(d)]
    target_rows = [(i, 2 * d - 1 - i) for i in range(2 * d)]
    row_index = {m: r for r, m in enumerate(target_rows)}
    for base in (fa, ga):
        for (ax, ay) in monos_a:
            col = [0] * (2 * d)
            for (bx, by), c in base.terms.items():
                col[row_index[(ax + bx, ay + by)]] += c
            cols.append(col)
    matrix = [[cols[c][r] for c in range(2 * d)] for r in range(2 * d)]
    rhs = [0] * (2 * d)
    if target_var == 0:
        rhs[row_index[(2 * d - 1, 0)]] = resultant
    else:
        rhs[row_index[(0, 2 * d - 1)]] = resultant
    sol = _solve_linear_fractions(matrix, rhs)
    if any(s.denominator != 1 for s in sol):
        raise ArithmeticError("cofactor solution not integral (bug)")
    a_terms = {m: int(sol[i]) for i, m in enumerate(monos_a) if sol[i]}
    b_terms = {m: int(sol[d + i]) for i, m in enumerate(monos_a)
               if sol[d + i]}
    A = HomPoly(nv, a_terms, d - 1)
    B = HomPoly(nv, b_terms, d - 1)
    # symbolic verification: the bound is only as good as this identity
    lhs = A * fa + B * ga
    target = {(2 * d - 1, 0) if target_var == 0 else (0, 2 * d - 1):
              resultant}
    if lhs.terms != {k: v for k, v in target.items() if v}:
        raise ArithmeticError("cofactor identity failed to verify (bug)")
    return A, B


def p1_defect_bound(f):
    """Certified C with |h(f(Q)) - d*h(Q)| <= C for all Q in P^1(Q).

    Upward: log of the largest coefficient 1-norm.  Downward: log K with
    K from the resultant cofactor identities A*F + B*G = Res * t^(2d-1).
    """
    if f.dim_n != 1:
        raise ValueError("P^1 maps only")
    res = binary_resultant(f)
    if res == 0:
        raise DegenerateMap(
            "coordinates share a root; not a morphism of P^1 (bug: "
            "normalization should have removed common factors)")
    c_up = coefficient_upper_bound(f)
    k_best = None
    for var in (0, 1):
        A, B = _cofactor_identity(f, res, var)
        k = A.coeff_abs_sum() + B.coeff_abs_sum()
        k_best = k if k_best is None else max(k_best, k)
    c_down = math.log(k_best)
    return max(c_up, c_down, 0.0)


# ---------------------------------------------------------------------------
# canonical height
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalHeightValue:
    value: float
    error_bound: float
    n_used: int
    bound_kind: str            # "CertifiedP1" | "CoefficientUpper" | "Empirical"
    defect_bound: float        # the C actually used
    budget_limited: bool = False


def canonical_height(f, point, delta=None, tol=1e-9,
                     bit_budget=DEFAULT_BIT_BUDGET, n_cap=10 ** 4,
                     empirical_lower=True):
    """Call-Silverman limit h(f^n P) / delta^n with a certified tail bound.

    Stops at the first n whose geometric tail C/(delta^n (delta-1)) is
    below tol.  On P^1 the defect constant C is fully certified; for
    N >= 2 the downward half of C is sampled from the computed orbit
    (bound_kind "Empirical"), or omitted entirely with
    empirical_lower=False (bound_kind "CoefficientUpper").
    """
    point = point if isinstance(point, ProjPointQ) else ProjPointQ(point)
    delta = Fraction(delta if delta is not None else f.degree)
    if delta <= 1:
        raise DegreeNotPolarized(f"delta = {delta} <= 1")
    d_float = float(delta)

    if f.dim_n == 1:
        c_bound = p1_defect_bound(f)
        kind = "CertifiedP1"
    else:
        c_bound = max(coefficient_upper_bound(f), 0.0)
        kind = "Empirical" if empirical_lower else "CoefficientUpper"

    def tail(c, n):
        return c / (d_float ** n * (d_float - 1))

    points = [point]
    heights = [weil_height(point)]
    seen = {point: 0}
    n = 0
    budget_limited = False
    while tail(c_bound, n) > tol:
        if n >= n_cap:
            budget_limited = True
            break
        try:
            nxt = f.eval(points[-1])
        except IndeterminatePoint as exc:
            raise NotEventuallyDefined(
                f"orbit hit indeterminacy at step {n + 1}") from exc
        if nxt in seen:
            # preperiodic: heights bounded, so the limit is exactly 0
            return CanonicalHeightValue(
                value=0.0, error_bound=0.0, n_used=n + 1,
                bound_kind=kind, defect_bound=c_bound)
        if nxt.max_coeff_bits() > bit_budget:
            budget_limited = True
            break
        points.append(nxt)
        seen[nxt] = n + 1
        heights.append(weil_height(nxt))
        n += 1
        if kind == "Empirical":
            observed = abs(heights[-1] - d_float * heights[-2])
            if observed > c_bound:
                c_bound = observed
    value = heights[n] / d_float ** n
    return CanonicalHeightValue(
        value=max(value, 0.0),
        error_bound=tail(c_bound, n),
        n_used=n,
        bound_kind=kind,
        defect_bound=c_bound,
        budget_limited=budget_limited,
    )


# ---------------------------------------------------------------------------
# preperiodicity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PreperiodicVerdict:
    kind: str                  # "Preperiodic" | "HeightEscape" | "NotWithinBudget"
    entry: int = None
    period: int = None
    canonical: CanonicalHeightValue = None


def is_preperiodic(f, point, n_max=200, bit_budget=DEFAULT_BIT_BUDGET):
    """Exact cycle detection, with a certified height escape proof on P^1.

    Preperiodic(entry, period) needs an exact cycle; HeightEscape needs a
    CertifiedP1 canonical height whose error bound excludes zero; all
    other outcomes are NotWithinBudget.
    """
    rec = orbit(f, point, n_max, bit_budget=bit_budget)
    if rec.is_preperiodic:
        return PreperiodicVerdict(
            kind="Preperiodic",
            entry=rec.termination.entry,
            period=rec.termination.period,
        )
    if f.dim_n == 1 and f.degree >= 2:
        ch = canonical_height(f, point, tol=1e-3, bit_budget=bit_budget)
        if ch.bound_kind == "CertifiedP1" and not ch.budget_limited \
                and ch.value - ch.error_bound > 0:
            return PreperiodicVerdict(kind="HeightEscape", canonical=ch)
    return PreperiodicVerdict(kind="NotWithinBudget")


# ---------------------------------------------------------------------------
# growth-exponent (polynomial correction) fitter
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShibataEstimate:
    ell_estimate: float
    residual: float            # rms residual of the least-squares fit
    fit_window: tuple          # (n_lo, n_hi) inclusive
    slope_drift: float         # second-half slope minus first-half slope
    nonpower_flag: bool        # drift beyond threshold: not a clean power law
    delta: float


def shibata_ell_estimate(heights, delta, window=None, drift_threshold=0.05):
    """Least-squares slope of (log h_n - n log delta) against log n.

    ``heights`` may be an OrbitRecord or a plain sequence indexed by n
    starting at 0.  The slope is reported as a real number with its
    residual and a drift diagnostic; it is never rounded to an integer.
    """
    if isinstance(heights, OrbitRecord):
        series = list(heights.heights)
    else:
        series = [float(h) for h in heights]
    delta = float(delta)
    if delta < 1:
        raise DegreeNotPolarized(f"delta = {delta} < 1")
    n_hi_default = len(series) - 1
    n_lo, n_hi = window if window is not None else (
        max(1, n_hi_default // 4), n_hi_default)
    n_hi = min(n_hi, len(series) - 1)
    if n_lo < 1 or n_hi < n_lo:
        raise Insufficient(f"empty fit window ({n_lo}, {n_hi})")
    pairs = [(n, series[n]) for n in range(n_lo, n_hi + 1)]
    usable = [(n, h) for n, h in pairs if h > HEIGHT_FLOOR]
    if not usable:
        raise NonpositiveHeights("no positive heights in the fit window")
    if len(usable) < 8:
        raise Insufficient(f"{len(usable)} usable heights in window (need 8)")
    xs = [math.log(n) for n, _ in usable]
    ys = [math.log(h) - n * math.log(delta) for n, h in usable]
    slope, _, rms = seqfit.linear_fit(xs, ys)
    half = len(usable) // 2
    drift = 0.0
    if half >= 3:
        s1, _, _ = seqfit.linear_fit(xs[:half], ys[:half])
        s2, _, _ = seqfit.linear_fit(xs[half:], ys[half:])
        drift = s2 - s1
    return ShibataEstimate(
        ell_estimate=slope,
        residual=rms,
        fit_window=(n_lo, n_hi),
        slope_drift=drift,
        nonpower_flag=abs(drift) > drift_threshold,
        delta=delta,
    )


# ---------------------------------------------------------------------------
# critical points and critical height on P^1
# ---------------------------------------------------------------------------

def critical_points_P1(f):
    """Critical points of a P^1 map from the Jacobian of its coordinates.

    Returns (rational_points, irrational_factor_degrees) where
    rational_points is a list of (ProjPointQ, multiplicity) and the
    degrees list describes what is left after extracting rational roots
    (square-free factor degree, repeated per multiplicity).
    """
    if f.dim_n != 1:
        raise ValueError("P^1 maps only")
    d = f.degree
    if d < 2:
        raise ValueError("need degree >= 2")
    F, G = f.coords
    wronsk = F.derivative(0) * G.derivative(1) - F.derivative(1) * G.derivative(0)
    if wronsk.is_zero:
        raise DegenerateMap("identically-zero Wronskian")
    min_x = min(e[0] for e in wronsk.terms)
    min_y = min(e[1] for e in wronsk.terms)
    rational = []
    if min_x:
        rational.append((ProjPointQ([0, 1]), min_x))
    if min_y:
        rational.append((ProjPointQ([1, 0]), min_y))
    reduced = {(i - min_x, j - min_y): c
               for (i, j), c in wronsk.terms.items()}
    deg_w = next(i + j for (i, j) in reduced)
    univ = [0] * (deg_w + 1)
    for (i, _), c in reduced.items():
        univ[i] = c
    total_checked = min_x + min_y
    if deg_w > 0:
        univ, roots = _rational_roots(univ)
        for (p, q), mult in roots:
            rational.append((ProjPointQ([p, q]), mult))
            total_checked += mult
    residual_degrees = []
    if len(univ) > 1:
        for factor, mult in squarefree_decomposition(univ):
            residual_degrees.extend([len(factor) - 1] * mult)
        total_checked += len(univ) - 1
    if total_checked != 2 * d - 2:
        raise ArithmeticError("critical multiplicity bookkeeping off (bug)")
    return rational, sorted(residual_degrees)


def _rational_roots(int_cs):
    """Extract rational roots with multiplicity from an integer polynomial.

    Returns (residual_int_coeffs, [((p, q), multiplicity)]) with p/q in
    lowest terms, q > 0.  Coefficients stay in ZZ throughout: dividing an
    integer polynomial by the primitive form q*x - p keeps integrality
    (Gauss), so the rational root theorem applies at every stage.
    """
    cs = [int(c) for c in int_cs]
    while cs and not cs[-1]:
        cs.pop()
    roots = []
    zeros = 0
    while len(cs) > 1 and cs[0] == 0:
        cs.pop(0)
        zeros += 1
    if zeros:
        roots.append(((0, 1), zeros))
    while len(cs) > 1:
        found = None
        for p in divisors(cs[0]):
            for q in divisors(cs[-1]):
                if math.gcd(p, q) != 1:
                    continue
                for sp in (p, -p):
                    if _eval_scaled(cs, sp, q) == 0:
                        found = (sp, q)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            break
        sp, q = found
        mult = 0
        while True:
            quo = _deflate_linear(cs, sp, q)
            if quo is None:
                break
            cs = quo
            mult += 1
        roots.append((found, mult))
    return cs, roots


def _eval_scaled(cs, p, q):
    """q^deg * f(p/q), an integer."""
    d = len(cs) - 1
    return sum(c * p ** i * q ** (d - i) for i, c in enumerate(cs))


def _deflate_linear(cs, p, q):
    """Exact quotient of an integer polynomial by (q*x - p), or None."""
    root = Fraction(p, q)
    acc = Fraction(0)
    out = []
    for c in reversed(cs):
        acc = acc * root + c
        out.append(acc)
    if out.pop() != 0:
        return None
    out.reverse()
    quo = []
    for w in out:
        v = w / q
        if v.denominator != 1:
            return None
        quo.append(int(v))
    return quo


@dataclass(frozen=True)
class CriticalHeight:
    value: float
    error_bound: float
    critical_points_used: tuple    # ((point, multiplicity), ...)
    contributions: tuple           # ((point, mult, hhat, err), ...)
    irrational_factor_degrees: tuple
    partial: bool                  # True when irrational criticals exist
    pcf_consistent: bool           # value - error <= 0 <= value + error


def critical_height_P1(f, tol=1e-8):
    """Sum of canonical heights over the rational critical points, with
    multiplicity.  Irrational critical points (reported by degree) make
    the value partial: points outside Q are out of scope."""
    rational, residual = critical_points_P1(f)
    total = 0.0
    err = 0.0
    contributions = []
    for pt, mult in rational:
        ch = canonical_height(f, pt, tol=tol)
        total += mult * ch.value
        err += mult * ch.error_bound
        contributions.append((pt, mult, ch.value, ch.error_bound))
    partial = bool(residual)
    return CriticalHeight(
        value=total,
        error_bound=err,
        critical_points_used=tuple(rational),
        contributions=tuple(contributions),
        irrational_factor_degrees=tuple(residual),
        partial=partial,
        pcf_consistent=(total - err) <= 0.0,
    )
