"""Homogeneous multivariate polynomials with integer coefficients.

HomPoly is the algebra object every other module builds on: immutable,
exactly homogeneous (enforced at construction), with arbitrary-precision
integer coefficients.  The zero polynomial carries a declared degree so
that degree bookkeeping survives cancellation.
"""

from . import intpoly
from .errors import (ArityMismatch, DegreeMismatch, EmptyInput,
                     ZeroPolynomial)
from .intpoly import ZZ


class HomPoly:
    """Immutable homogeneous polynomial over ZZ."""

    __slots__ = ("num_vars", "degree", "terms", "_hash")

    def __init__(self, num_vars, terms, degree=None):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        clean = {}
        for exps, c in terms.items():
            c = int(c)
            if not c:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps}")
            clean[exps] = c
        if clean:
            degrees = {sum(e) for e in clean}
            if len(degrees) > 1:
                raise ValueError(f"not homogeneous: degrees {sorted(degrees)}")
            d = degrees.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} != actual {d}")
            degree = d
        elif degree is None:
            raise ValueError("zero polynomial needs an explicit degree")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "degree", int(degree))
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("HomPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, num_vars, degree=0):
        return cls(num_vars, {}, degree)

    @classmethod
    def constant(cls, num_vars, c):
        return cls(num_vars, {(0,) * num_vars: c}, 0)

    @classmethod
    def variable(cls, i, num_vars):
        e = tuple(1 if j == i else 0 for j in range(num_vars))
        return cls(num_vars, {e: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff}, sum(exps))

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, HomPoly)
                and self.num_vars == other.num_vars
                and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num_vars, self.degree,
                      frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"HomPoly({self.to_string()})"

    def to_string(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.num_vars)]
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ---------------------------------------------------------

    def _check_arity(self, other):
        if self.num_vars != other.num_vars:
            raise ArityMismatch(
                f"{self.num_vars} variables vs {other.num_vars}")

    def __add__(self, other):
        self._check_arity(other)
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"degree {self.degree} + degree {other.degree}")
        return HomPoly(self.num_vars,
                       intpoly.p_add(ZZ, self.terms, other.terms),
                       self.degree)

    def __neg__(self):
        return HomPoly(self.num_vars, intpoly.p_neg(ZZ, self.terms),
                       self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HomPoly(self.num_vars,
                           intpoly.p_scalar_mul(ZZ, other, self.terms),
                           self.degree)
        self._check_arity(other)
        return HomPoly(self.num_vars,
                       intpoly.p_mul(ZZ, self.terms, other.terms),
                       self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power")
        return HomPoly(self.num_vars,
                       intpoly.p_pow(ZZ, self.terms, e, self.num_vars),
                       self.degree * e)

    def compose(self, subst):
        """Substitute subst[i] for variable i; subst share arity and degree."""
        if len(subst) != self.num_vars:
            raise ArityMismatch(
                f"{self.num_vars} variables, {len(subst)} substitutions")
        nv = subst[0].num_vars
        d = subst[0].degree
        for q in subst[1:]:
            if q.num_vars != nv:
                raise ArityMismatch("substitution polynomials mix arities")
            if q.degree != d:
                raise DegreeMismatch("substitution polynomials mix degrees")
        raw = intpoly.p_substitute(ZZ, self.terms,
                                   [q.terms for q in subst], nv)
        return HomPoly(nv, raw, self.degree * d)

    def derivative(self, var):
        raw = intpoly.p_derivative(ZZ, self.terms, var)
        return HomPoly(self.num_vars, raw, max(self.degree - 1, 0))

    def evaluate(self, vals):
        """Exact evaluation at scalars (ints or Fractions)."""
        if len(vals) != self.num_vars:
            raise ArityMismatch("wrong number of values")
        return intpoly.p_eval(self.terms, list(vals))

    # -- content / gcd ------------------------------------------------------

    def content(self):
        if not self.terms:
            raise ZeroPolynomial("content of the zero polynomial")
        return intpoly.p_scalar_content(ZZ, self.terms)

    def primitive_part(self):
        c = self.content()
        if c == 1:
            return self
        return HomPoly(self.num_vars,
                       {e: v // c for e, v in self.terms.items()},
                       self.degree)

    def divexact(self, other):
        """Exact quotient; raises intpoly.ExactDivisionError otherwise."""
        self._check_arity(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        raw = intpoly.p_divexact(ZZ, self.terms, other.terms)
        return HomPoly(self.num_vars, raw, self.degree - other.degree)

    def divides(self, other):
        return intpoly.p_divides(ZZ, self.terms, other.terms)

    def max_coeff_bits(self):
        return max((abs(c).bit_length() for c in self.terms.values()),
                   default=0)

    def coeff_abs_sum(self):
        return sum(abs(c) for c in self.terms.values())


# ---------------------------------------------------------------------------
# operation-style API
# ---------------------------------------------------------------------------

def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_compose(p, subst):
    return p.compose(subst)


def content(p):
    return p.content()


def multi_gcd(polys):
    """Primitive gcd of nonzero homogeneous polynomials, sign-normalized
    so the lexicographically largest monomial has positive coefficient."""
    polys = list(polys)
    if not polys:
        raise EmptyInput("multi_gcd of no polynomials")
    nv = polys[0].num_vars
    for p in polys:
        if p.num_vars != nv:
            raise ArityMismatch("mixed arities in multi_gcd")
        if p.is_zero:
            raise ZeroPolynomial("multi_gcd input contains zero")
    raw = intpoly.p_gcd_list(ZZ, [p.terms for p in polys], nv)
    g = HomPoly(nv, raw)
    g = g.primitive_part()
    # p_gcd normalizes the lex-leading sign already, but primitive_part
    # divides by a positive content so the sign is stable; assert anyway.
    lead = max(g.terms)
    if g.terms[lead] < 0:
        g = -g
    return g
