"""Exception hierarchy shared by all deglab modules.

Every failure mode that is part of an operation's contract gets its own
class so callers can match on it; exceptions that carry useful partial
results expose them as attributes.
"""


class DeglabError(Exception):
    """Base class for all deglab errors."""


# ---------------------------------------------------------------------------
# exact algebra
# ---------------------------------------------------------------------------

class ArityMismatch(DeglabError):
    """Operands declare different numbers of variables."""


class DegreeMismatch(DeglabError):
    """Homogeneous degrees incompatible for the requested operation."""


class ZeroPolynomial(DeglabError):
    """Operation undefined for the zero polynomial."""


class EmptyInput(DeglabError):
    """An operation over a collection received no usable elements."""


class BadK(DeglabError):
    """Exterior power index outside 1..n."""


class SingularMatrix(DeglabError):
    """Matrix required to be nonsingular has determinant zero."""


class ToleranceNotReached(DeglabError):
    """Enclosure refinement hit its iteration cap.

    Carries the best enclosure computed so far in ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


# ---------------------------------------------------------------------------
# parsing / map documents
# ---------------------------------------------------------------------------

class PolySyntaxError(DeglabError):
    """Bad polynomial or document text; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotHomogeneous(DeglabError):
    """A coordinate polynomial mixes total degrees; ``index`` says which."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class AllCoordinatesZero(DeglabError):
    """Every coordinate of a would-be map is the zero polynomial."""


# ---------------------------------------------------------------------------
# projective maps / orbits
# ---------------------------------------------------------------------------

class DimensionMismatch(DeglabError):
    """Maps or points live on projective spaces of different dimension."""


class ZeroMap(DeglabError):
    """Composition produced the identically-zero coordinate tuple."""


class BudgetExceeded(DeglabError):
    """A degree/bit/step budget was hit; ``partial`` holds what we got."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class IndeterminatePoint(DeglabError):
    """Evaluation at a point of the indeterminacy locus; ``step`` optional."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class TooShort(DeglabError):
    """Sequence too short for the requested estimator."""


# ---------------------------------------------------------------------------
# heights
# ---------------------------------------------------------------------------

class Insufficient(DeglabError):
    """Not enough usable orbit data for an estimate."""


class NonpositiveHeights(DeglabError):
    """Height series contains no positive entries in the fit window."""


class NotEventuallyDefined(DeglabError):
    """Orbit hit the indeterminacy locus before the estimator converged."""


class DegreeNotPolarized(DeglabError):
    """Canonical height needs a scaling factor greater than one."""


class DegenerateMap(DeglabError):
    """Map fails a nondegeneracy requirement (e.g. identically-zero Wronskian)."""


class NotAMorphism(DeglabError):
    """Certified-morphism arithmetic requested for a non-morphism."""


# ---------------------------------------------------------------------------
# reduction mod p
# ---------------------------------------------------------------------------

class BadReduction(DeglabError):
    """Reduction mod p degenerates; carries the prime and a reason."""

    def __init__(self, p, reason):
        super().__init__(f"bad reduction at p={p}: {reason}")
        self.p = p
        self.reason = reason


# ---------------------------------------------------------------------------
# gcd heights
# ---------------------------------------------------------------------------

class PointOnSubvariety(DeglabError):
    """All subvariety generators vanish at the point; ``step`` optional."""

    def __init__(self, message, step=None, partial=None):
        super().__init__(message)
        self.step = step
        self.partial = partial


class InconclusiveEnclosure(DeglabError):
    """Interval widths too large to decide an inequality either way."""
