"""Heights relative to subvarieties of codimension >= 2, realized as the
log gcd of the values of (primitive) ideal generators at the point.

This representative reproduces both worked identities that anchor it:
for Z = {[1,1,1]} cut out by (x-z, y-z) one gets log gcd(a-1, b-1) at
[a,b,1], and along power-map orbits with Z = {[0,0,1]} the ratio
h_Z/h_H is exactly constant.  Archimedean contributions are deliberately
excluded; the ratio limits studied here only see the gcd part.
"""

import math
from dataclasses import dataclass

from .errors import IndeterminatePoint, PointOnSubvariety
from .hompoly import HomPoly
from .parsing import parse_homogeneous
from .points import ProjPointQ, weil_height
from . import seqfit


class SubvarietySpec:
    """Ideal generators of a subvariety of codimension >= 2 (by intent:
    at least two generators).  Generators are stored primitive with a
    positive lex-leading coefficient so the height representative does
    not depend on the scaling of the input."""

    __slots__ = ("generators",)

    def __init__(self, generators):
        gens = list(generators)
        if len(gens) < 2:
            raise ValueError("codimension >= 2 needs at least 2 generators")
        if all(g.is_zero for g in gens):
            raise ValueError("generators jointly zero")
        normalized = []
        for g in gens:
            if g.is_zero:
                continue
            g = g.primitive_part()
            if g.terms[max(g.terms)] < 0:
                g = -g
            normalized.append(g)
        object.__setattr__(self, "generators", tuple(normalized))

    def __setattr__(self, *_):
        raise AttributeError("SubvarietySpec is immutable")

    @classmethod
    def from_strings(cls, texts, var_names):
        return cls([parse_homogeneous(t, var_names) for t in texts])

    def to_document(self, var_names=None):
        names = var_names or [f"x{i}" for i in
                              range(self.generators[0].num_vars)]
        return {"generators": [g.to_string(names) for g in self.generators]}


def gcd_height(point, z):
    """log gcd of the nonzero generator values at the canonical integer
    coordinates; zero values contribute nothing (their valuation is
    infinite at every prime, so the min is over the rest)."""
    point = point if isinstance(point, ProjPointQ) else ProjPointQ(point)
    values = [abs(g.evaluate(point.coords)) for g in z.generators]
    nonzero = [v for v in values if v]
    if not nonzero:
        raise PointOnSubvariety(f"all generators vanish at {point!r}")
    g = 0
    for v in nonzero:
        g = math.gcd(g, v)
        if g == 1:
            break
    return math.log(g)


@dataclass(frozen=True)
class GcdRatioSeries:
    map_id: str
    start: ProjPointQ
    entries: tuple          # (n, h_Z, h_H, ratio-or-None)
    max_ratio: float
    prefix_mean: float      # mean ratio over n <= prefix_cut
    tail_mean: float        # mean ratio over the last third
    trend_slope: float      # least-squares slope of ratio against n
    prefix_cut: int


def gcd_ratio_series(f, point, z, n_max, prefix_cut=20):
    """Per-step pairs (h_Z(f^n P), h(f^n P)) and their ratio along an orbit.

    The orbit must avoid Z and the indeterminacy locus up to n_max;
    hitting either raises, with the partial series attached.
    """
    point = point if isinstance(point, ProjPointQ) else ProjPointQ(point)
    entries = []
    current = point
    for n in range(n_max + 1):
        if n > 0:
            try:
                current = f.eval(current)
            except IndeterminatePoint as exc:
                exc.step = n
                exc.partial = tuple(entries)
                raise
        try:
            hz = gcd_height(current, z)
        except PointOnSubvariety as exc:
            raise PointOnSubvariety(
                f"orbit meets the subvariety at step {n}", step=n,
                partial=tuple(entries)) from None
        hh = weil_height(current)
        ratio = hz / hh if hh > 0 else None
        entries.append((n, hz, hh, ratio))
    ratios = [(n, r) for n, _, _, r in entries if r is not None]
    if not ratios:
        raise PointOnSubvariety("no usable ratios (all heights zero)",
                                partial=tuple(entries))
    vals = [r for _, r in ratios]
    prefix = [r for n, r in ratios if n <= prefix_cut]
    tail = vals[-max(1, len(vals) // 3):]
    if len(ratios) >= 3:
        slope, _, _ = seqfit.linear_fit([n for n, _ in ratios], vals)
    else:
        slope = 0.0
    return GcdRatioSeries(
        map_id=f.map_id(),
        start=point,
        entries=tuple(entries),
        max_ratio=max(vals),
        prefix_mean=sum(prefix) / len(prefix) if prefix else float("nan"),
        tail_mean=sum(tail) / len(tail),
        trend_slope=slope,
        prefix_cut=prefix_cut,
    )
