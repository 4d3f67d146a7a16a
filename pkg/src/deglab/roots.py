"""Certified real-root machinery over the rationals.

Univariate polynomials here are ascending coefficient lists.  The two
jobs of this module are (a) rational enclosures of n-th roots of
rationals, and (b) certified enclosures of the largest root modulus of
an integer polynomial: build the root-product polynomial s(y) whose
roots are all pairwise products of roots of p, so the squared maximal
modulus is the largest *real* root of s, then isolate that root with a
Sturm-sequence bisection.  Everything is exact; no floating point.
"""

import math
from fractions import Fraction


# ---------------------------------------------------------------------------
# integer / rational roots
# ---------------------------------------------------------------------------

def int_nthroot(x, m):
    """floor(x ** (1/m)) for integers x >= 0, m >= 1."""
    if x < 0:
        raise ValueError("negative radicand")
    if m == 1 or x in (0, 1):
        return x
    r = 1 << -(-x.bit_length() // m)  # >= true root
    while True:
        rn = ((m - 1) * r + x // r ** (m - 1)) // m
        if rn >= r:
            break
        r = rn
    while r ** m > x:
        r -= 1
    while (r + 1) ** m <= x:
        r += 1
    return r


def nthroot_bounds(v, m, bits=64):
    """Rational lo <= v**(1/m) <= hi with hi - lo <= 2**-bits; exact when possible."""
    v = Fraction(v)
    if v < 0:
        raise ValueError("negative radicand")
    if v == 0:
        return Fraction(0), Fraction(0)
    p, q = v.numerator, v.denominator
    D = 1 << bits
    target = p * D ** m
    a = int_nthroot(target // q, m)
    while (a + 1) ** m * q <= target:
        a += 1
    while a ** m * q > target:
        a -= 1
    lo = Fraction(a, D)
    if a ** m * q == target:
        return lo, lo
    return lo, Fraction(a + 1, D)


# ---------------------------------------------------------------------------
# integer factorization (for rational-root searches)
# ---------------------------------------------------------------------------

def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def factor_int(n):
    """Prime factorization {p: e} of |n| (n != 0)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def divisors(n):
    """Sorted positive divisors of |n| (n != 0)."""
    divs = [1]
    for p, e in factor_int(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


# ---------------------------------------------------------------------------
# exact determinant (Bareiss), used for Sylvester resultants and minors
# ---------------------------------------------------------------------------

def det_int(rows):
    """Determinant of a square integer matrix, fraction-free Bareiss."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# univariate helpers over Fraction (ascending coefficient lists)
# ---------------------------------------------------------------------------

def utrim(cs):
    while cs and not cs[-1]:
        cs.pop()
    return cs


def ueval(cs, x):
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def uderiv(cs):
    return [i * c for i, c in enumerate(cs)][1:]


def _urem(a, b):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        factor = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
        utrim(a)
    return a


def squarefree(cs):
    """Square-free part of a nonzero polynomial over Fraction."""
    cs = [Fraction(c) for c in cs]
    utrim(cs)
    if len(cs) <= 2:
        return cs
    a, b = cs, uderiv(cs)
    while b:
        a, b = b, _urem(a, b)
    g = a  # gcd(p, p') up to scalar
    if len(g) <= 1:
        return cs
    return _uquo(cs, g)


def _uquo(a, b):
    """Exact quotient of univariate polynomials over Fraction."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        factor = a[-1] / lb
        shift = len(a) - len(b)
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
        utrim(a)
    return utrim(q)


def ugcd(a, b):
    """Monic gcd of univariate polynomials over Fraction."""
    a = utrim([Fraction(c) for c in a])
    b = utrim([Fraction(c) for c in b])
    while b:
        a, b = b, _urem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _usub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return utrim(out)


def squarefree_decomposition(cs):
    """Yun's algorithm: [(factor, multiplicity)] with factors monic,
    nonconstant, pairwise coprime; product of factor^mult = cs / lc."""
    cs = utrim([Fraction(c) for c in cs])
    if len(cs) <= 1:
        return []
    cs = [c / cs[-1] for c in cs]
    deriv = uderiv(cs)
    a = ugcd(cs, deriv)
    if len(a) <= 1:
        return [(cs, 1)]
    b = _uquo(cs, a)
    d = _usub(_uquo(deriv, a), uderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = ugcd(b, d) if d else [c / b[-1] for c in b]
        if len(g) > 1:
            out.append((g, i))
            b = _uquo(b, g)
            d = _uquo(d, g) if d else d
        d = _usub(d, uderiv(b))
        i += 1
    return out


def sturm_chain(cs):
    chain = [list(cs)]
    d = uderiv(cs)
    if not d:
        return chain
    chain.append(d)
    while True:
        r = [-c for c in _urem(chain[-2], chain[-1])]
        utrim(r)
        if not r:
            return chain
        chain.append(r)


def _variations(signs):
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _sign(x):
    return (x > 0) - (x < 0)


def count_roots_above(chain, t):
    """Number of distinct real roots in the open interval (t, +inf)."""
    at_t = _variations([_sign(ueval(cs, t)) for cs in chain])
    at_inf = _variations([_sign(cs[-1]) for cs in chain])
    return at_t - at_inf


def cauchy_bound(cs):
    lead = abs(cs[-1])
    return Fraction(1) + max(abs(Fraction(c)) / lead for c in cs)


def max_real_root(cs, width):
    """Enclosure (lo, hi) of the largest real root, hi - lo <= width.

    Returns None when the polynomial has no real roots.  Returns an
    exact pair (r, r) when bisection or the rational-candidate probe
    lands on the root itself.
    """
    cs = squarefree(cs)
    chain = sturm_chain(cs)
    bound = cauchy_bound(cs)
    lo, hi = -bound, bound
    if count_roots_above(chain, lo) == 0:
        if ueval(cs, lo) == 0:
            return lo, lo
        return None
    # invariant: at least one root in (lo, +inf), none in (hi, +inf)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if ueval(cs, mid) == 0:
            if count_roots_above(chain, mid) == 0:
                return mid, mid
            lo = mid
        elif count_roots_above(chain, mid) >= 1:
            lo = mid
        else:
            hi = mid
        if hi - lo <= width and hi != lo:
            cand = _rational_candidate(lo, hi)
            if cand is not None and ueval(cs, cand) == 0 \
                    and count_roots_above(chain, cand) == 0:
                return cand, cand
    return lo, hi


def _rational_candidate(lo, hi):
    """Smallest-denominator rational strictly inside (lo, hi), if simple."""
    # Stern-Brocot style search, capped
    a, b = lo, hi
    for den in (1, 2, 3, 4, 5, 6, 8, 10, 12, 100, 1000):
        num_lo = a * den
        k = num_lo.numerator // num_lo.denominator + 1
        cand = Fraction(k, den)
        if a < cand < b:
            return cand
    return None


# ---------------------------------------------------------------------------
# largest root modulus of an integer polynomial
# ---------------------------------------------------------------------------

def _root_product_poly(int_cs):
    """s(y) = prod over root pairs (y - x_i x_j) of p, up to a scalar.

    Computed as Res_x(p(x), T(x, y)) with T(x, y) = sum c_k y^k x^(d-k),
    by integer Sylvester determinants at interpolation nodes.  Requires
    a nonzero constant term (strip zero roots first).
    """
    d = len(int_cs) - 1
    nodes = range(-(d * d) // 2, d * d - (d * d) // 2 + 1)
    values = []
    for y0 in nodes:
        t_cs = [int_cs[d - j] * y0 ** (d - j) for j in range(d + 1)]
        values.append(_resultant_int(int_cs, t_cs))
    return _interpolate_int(list(nodes), values)


def _resultant_int(f, g):
    """Resultant of two integer polynomials (ascending lists)."""
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    rows = []
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return det_int(rows)


def _interpolate_int(xs, ys):
    """Integer polynomial through the points, via Newton divided differences."""
    n = len(xs)
    diffs = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            diffs[i] = (diffs[i] - diffs[i - 1]) / (xs[i] - xs[i - j])
    # Newton form -> dense coefficients
    poly = [Fraction(0)] * n
    acc = [Fraction(1)]
    for i in range(n):
        for k, c in enumerate(acc):
            poly[k] += diffs[i] * c
        # acc *= (x - xs[i])
        acc = [Fraction(0)] + acc
        for k in range(len(acc) - 1):
            acc[k] -= xs[i] * acc[k + 1]

    utrim(poly)
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced non-integer")
        out.append(c.numerator)
    return out


def _bits_for(tol):
    need = 0 if tol >= 1 else (tol.denominator // max(tol.numerator, 1)).bit_length()
    return max(80, need + 16)


def max_root_modulus(int_cs, tol):
    """Enclosure (lo, hi) of max |root| of an integer polynomial, hi-lo <= tol.

    The polynomial is given as an ascending integer coefficient list and
    must be nonzero of degree >= 1.
    """
    tol = Fraction(tol)
    bits = _bits_for(tol)
    cs = list(int_cs)
    utrim(cs)
    if len(cs) <= 1:
        raise ValueError("need degree >= 1")
    while not cs[0]:
        cs.pop(0)
    if len(cs) == 1:
        return Fraction(0), Fraction(0)  # only zero roots
    sf = squarefree(cs)
    den_lcm = 1
    for c in sf:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    int_sf = [int(c * den_lcm) for c in sf]
    if len(int_sf) == 2:
        rho = abs(Fraction(int_sf[0], int_sf[1]))
        return rho, rho
    s = _root_product_poly(int_sf)

    width = tol
    while True:
        enc = max_real_root(s, width)
        if enc is None:
            raise ArithmeticError("root-product polynomial has no real root")
        ylo, yhi = max(enc[0], Fraction(0)), max(enc[1], Fraction(0))
        lo = nthroot_bounds(ylo, 2, bits)[0]
        hi = nthroot_bounds(yhi, 2, bits)[1]
        if hi - lo <= tol or enc[0] == enc[1]:
            return lo, hi
        width /= 256
