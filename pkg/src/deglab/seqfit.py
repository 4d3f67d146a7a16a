"""Series diagnostics shared by the degree and height estimators:
Aitken extrapolation, exact polynomial-growth detection, and small
least-squares fits.  Everything here is float-valued estimation; the
certified quantities live with their producers.
"""

import math


def aitken_step(a, b, c):
    """One Aitken delta-squared step on the triple (a, b, c)."""
    denom = (c - b) - (b - a)
    if denom == 0:
        return c
    return c - (c - b) ** 2 / denom


def aitken_extrapolate(seq):
    """Aitken acceleration applied to the tail of a sequence.

    Repeatedly collapses the last triples; returns the final value
    (the last raw entry when the sequence is too short).
    """
    cur = list(seq)
    while len(cur) >= 3:
        cur = [aitken_step(cur[i], cur[i + 1], cur[i + 2])
               for i in range(len(cur) - 2)]
        if len(cur) > 6:
            cur = cur[-6:]
    return cur[-1]


def tail_spread(seq, k):
    """max - min over the last k entries."""
    tail = seq[-k:]
    return max(tail) - min(tail)


def exact_poly_degree(values, max_k=8):
    """Degree k when the integer sequence is exactly a degree-k polynomial
    of its index, detected by vanishing finite differences; else None.

    Requires at least two surviving entries in the vanishing difference
    row, so short sequences never spuriously match.
    """
    diffs = list(values)
    for k in range(0, max_k + 1):
        nxt = [b - a for a, b in zip(diffs, diffs[1:])]
        if len(nxt) >= 2 and all(v == 0 for v in nxt):
            return k
        if not nxt:
            return None
        diffs = nxt
    return None


def linear_fit(xs, ys):
    """Ordinary least squares y = slope*x + intercept.

    Returns (slope, intercept, rms_residual).
    """
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points")
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0:
        raise ValueError("degenerate abscissae")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    rss = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    return slope, intercept, math.sqrt(rss / n)


def power_fit(ns, vals):
    """Fit vals ~ C * n^k on log-log axes.

    Returns (k, C, max_rel_err) where max_rel_err is the largest
    relative deviation of the fitted model from the data.
    """
    xs = [math.log(n) for n in ns]
    ys = [math.log(v) for v in vals]
    k, logc, _ = linear_fit(xs, ys)
    c = math.exp(logc)
    max_rel = max(abs(c * n ** k - v) / abs(v) for n, v in zip(ns, vals))
    return k, c, max_rel
