"""Rational projective points in canonical integer coordinates.

The canonical representative has coprime integer coordinates with the
first nonzero one positive, so equality of points is tuple equality and
the Weil height reads straight off the coordinates.
"""

import math
from fractions import Fraction


class ProjPointQ:
    """Point of P^N(Q), stored as its canonical integer representative."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        fracs = [Fraction(c) for c in coords]
        if len(fracs) < 2:
            raise ValueError("projective point needs at least 2 coordinates")
        if all(f == 0 for f in fracs):
            raise ValueError("all coordinates zero")
        den_lcm = 1
        for f in fracs:
            den_lcm = den_lcm * f.denominator // math.gcd(
                den_lcm, f.denominator)
        ints = [int(f * den_lcm) for f in fracs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        for v in ints:
            if v:
                if v < 0:
                    ints = [-w for w in ints]
                break
        object.__setattr__(self, "coords", tuple(ints))

    def __setattr__(self, *_):
        raise AttributeError("ProjPointQ is immutable")

    @property
    def dim(self):
        return len(self.coords) - 1

    def __eq__(self, other):
        return isinstance(other, ProjPointQ) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if self.max_coeff_bits() <= 64:
            return f"[{', '.join(str(c) for c in self.coords)}]"
        return f"<point with {self.max_coeff_bits()}-bit coordinates>"

    def max_abs(self):
        return max(abs(c) for c in self.coords)

    def max_coeff_bits(self):
        return self.max_abs().bit_length()


def weil_height(point):
    """Logarithmic Weil height: log of the largest |coordinate| of the
    canonical representative.  Zero exactly on points with coordinates
    in {-1, 0, 1}."""
    return math.log(point.max_abs())
