"""Sparse multivariate polynomial arithmetic over ZZ and GF(p).

A "raw" polynomial in k variables is a dict mapping exponent tuples of
length k to nonzero coefficients; {} is the zero polynomial.  Coefficients
are plain Python ints in both supported coefficient domains (arbitrary
precision over ZZ, canonical representatives 1..p-1 over GF(p)), so zero
tests are plain truthiness.

The gcd is the classical recursion: view the polynomial as univariate in
its last variable, pull out the content (a gcd in one variable fewer),
and run a subresultant polynomial remainder sequence on the primitive
parts.  All divisions performed are exact in the coefficient ring, which
keeps everything fraction-free.
"""

import math


class ExactDivisionError(ArithmeticError):
    """Requested exact division has a nonzero remainder."""


# ---------------------------------------------------------------------------
# coefficient domains
# ---------------------------------------------------------------------------

class IntegerDomain:
    """Arbitrary-precision integers."""

    is_field = False
    one = 1

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def gcd(a, b):
        return math.gcd(a, b)

    @staticmethod
    def divexact(a, b):
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} not divisible by {b}")
        return q

    @staticmethod
    def canonical_unit(a):
        # unit u such that a // u has positive sign
        return -1 if a < 0 else 1


class PrimeFieldDomain:
    """GF(p) with canonical representatives in 1..p-1 (0 never stored)."""

    is_field = True
    one = 1

    def __init__(self, p):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def gcd(self, a, b):
        return 1 if (a or b) else 0

    def divexact(self, a, b):
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def canonical_unit(self, a):
        # dividing by a itself makes the coefficient 1
        return a


ZZ = IntegerDomain()


# ---------------------------------------------------------------------------
# basic arithmetic on raw polynomials
# ---------------------------------------------------------------------------

def p_const(c, nvars):
    return {(0,) * nvars: c} if c else {}


def p_add(dom, f, g):
    if not f:
        return dict(g)
    if not g:
        return dict(f)
    out = dict(f)
    for e, c in g.items():
        s = dom.add(out.get(e, 0), c)
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def p_neg(dom, f):
    return {e: dom.neg(c) for e, c in f.items()}


def p_sub(dom, f, g):
    return p_add(dom, f, p_neg(dom, g))


def p_mul(dom, f, g):
    if not f or not g:
        return {}
    if len(f) > len(g):
        f, g = g, f
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = dom.mul(c1, c2)
            acc = out.get(e)
            if acc is None:
                if c:
                    out[e] = c
            else:
                s = dom.add(acc, c)
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def p_scalar_mul(dom, c, f):
    if not c:
        return {}
    out = {}
    for e, k in f.items():
        v = dom.mul(c, k)
        if v:
            out[e] = v
    return out


def p_pow(dom, f, e, nvars):
    if e < 0:
        raise ValueError("negative exponent")
    result = p_const(dom.one, nvars)
    base = f
    while e:
        if e & 1:
            result = p_mul(dom, result, base)
        base = p_mul(dom, base, base)
        e >>= 1
    return result


def p_total_degree(f):
    return max(sum(e) for e in f) if f else -1


def p_lex_lead(f):
    """Lexicographically largest exponent tuple (tuple order is lex)."""
    return max(f)


def p_substitute(dom, f, subs, out_nvars):
    """Substitute subs[i] (raw, out_nvars vars) for variable i of f."""
    if not f:
        return {}
    caches = [{0: p_const(dom.one, out_nvars), 1: s} for s in subs]

    def power(i, e):
        cache = caches[i]
        got = cache.get(e)
        if got is None:
            got = p_mul(dom, power(i, e - 1), cache[1])
            cache[e] = got
        return got

    acc = {}
    for exps, c in f.items():
        term = p_const(c, out_nvars)
        for i, ei in enumerate(exps):
            if ei:
                term = p_mul(dom, term, power(i, ei))
        acc = p_add(dom, acc, term)
    return acc


def p_derivative(dom, f, var):
    out = {}
    for e, c in f.items():
        k = e[var]
        if not k:
            continue
        kk = k % dom.p if dom.is_field else k
        if not kk:
            continue
        coeff = dom.mul(c, kk)
        if not coeff:
            continue
        ne = e[:var] + (k - 1,) + e[var + 1:]
        prev = out.get(ne, 0)
        s = dom.add(prev, coeff) if prev else coeff
        if s:
            out[ne] = s
        else:
            out.pop(ne, None)
    return out


def p_eval(f, vals):
    """Evaluate with plain Python arithmetic (ints, Fractions, floats)."""
    if not f:
        return 0
    caches = [{0: 1, 1: v} for v in vals]

    def power(i, e):
        cache = caches[i]
        got = cache.get(e)
        if got is None:
            half = power(i, e >> 1)
            got = half * half
            if e & 1:
                got *= cache[1]
            cache[e] = got
        return got

    total = 0
    for exps, c in f.items():
        term = c
        for i, ei in enumerate(exps):
            if ei:
                term *= power(i, ei)
        total += term
    return total


def p_eval_mod(f, vals, p):
    """Evaluate with all arithmetic reduced mod p."""
    total = 0
    for exps, c in f.items():
        term = c % p
        for v, ei in zip(vals, exps):
            if ei:
                term = (term * pow(v, ei, p)) % p
        total = (total + term) % p
    return total


# ---------------------------------------------------------------------------
# exact division, content, normalization
# ---------------------------------------------------------------------------

def p_divexact(dom, f, g):
    """Exact quotient f / g; raises ExactDivisionError if not divisible."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return {}
    gl = max(g)
    gc = g[gl]
    if len(g) == 1:
        out = {}
        for e, c in f.items():
            qe = tuple(a - b for a, b in zip(e, gl))
            if any(x < 0 for x in qe):
                raise ExactDivisionError("monomial does not divide term")
            out[qe] = dom.divexact(c, gc)
        return out
    q = {}
    r = dict(f)
    while r:
        rl = max(r)
        qe = tuple(a - b for a, b in zip(rl, gl))
        if any(x < 0 for x in qe):
            raise ExactDivisionError("leading term not divisible")
        qc = dom.divexact(r[rl], gc)
        q[qe] = qc
        for ge, gco in g.items():
            e = tuple(a + b for a, b in zip(qe, ge))
            s = dom.sub(r.get(e, 0), dom.mul(qc, gco))
            if s:
                r[e] = s
            else:
                r.pop(e, None)
    return q


def p_divides(dom, g, f):
    try:
        p_divexact(dom, f, g)
        return True
    except ExactDivisionError:
        return False


def p_scalar_content(dom, f):
    """gcd of all coefficients (a scalar; 0 for the zero polynomial)."""
    c = 0
    for v in f.values():
        c = dom.gcd(c, v)
        if c == dom.one:
            break
    return c


def p_normal(dom, f):
    """Unit-normalize: lex-leading coefficient positive (ZZ) or 1 (GF(p))."""
    if not f:
        return {}
    u = dom.canonical_unit(f[max(f)])
    if u == dom.one:
        return dict(f)
    return {e: dom.divexact(c, u) for e, c in f.items()}


# ---------------------------------------------------------------------------
# gcd: content/primitive recursion + subresultant PRS in the last variable
# ---------------------------------------------------------------------------

# Evaluation witnesses below use a fixed Mersenne prime: big enough that
# arithmetic is single-word-ish, never a divisor of the small leading
# coefficients seen at desk scale.
_WITNESS_P = (1 << 61) - 1
_WITNESS_POINTS = ((2, 3, 5, 7), (11, 13, 17, 19), (23, 29, 31, 37),
                   (41, 43, 47, 53), (59, 61, 67, 71), (73, 79, 83, 89))


def _gcd_z_degree_zero_witness(f, g, nvars):
    """Certified test that gcd(f, g) has degree 0 in the last variable.

    Evaluate all variables but the last at a point mod a large prime and
    take the univariate gcd.  If the leading z-coefficients of f and g
    survive the evaluation, any common factor with positive z-degree
    would survive too (its leading z-coefficient divides both of
    theirs), so a constant univariate gcd is a proof.  Returns True on
    proof, False when no certificate was found.
    """
    p = _WITNESS_P
    dzf = max(e[-1] for e in f)
    dzg = max(e[-1] for e in g)
    if dzf == 0 or dzg == 0:
        return False
    for point in _WITNESS_POINTS:
        vals = point[:nvars - 1]
        uf = _eval_to_univar(f, vals, dzf, p)
        ug = _eval_to_univar(g, vals, dzg, p)
        if uf[-1] == 0 or ug[-1] == 0:
            continue  # a leading coefficient vanished: point unusable
        if _univar_gcd_degree_mod_p(uf, ug, p) == 0:
            return True
    return False


def _eval_to_univar(f, vals, dz, p):
    out = [0] * (dz + 1)
    for e, c in f.items():
        term = c % p
        for v, ei in zip(vals, e):
            if ei:
                term = (term * pow(v, ei, p)) % p
        out[e[-1]] = (out[e[-1]] + term) % p
    return out


def _field_witness_points(p, k, cap=64):
    """Deterministic evaluation points in GF(p)^k, at most ``cap``."""
    if p ** k <= cap:
        points = []

        def gen(prefix):
            if len(prefix) == k:
                points.append(tuple(prefix))
                return
            for v in range(p):
                gen(prefix + [v])
        gen([])
        return points
    out = []
    state = 123456789
    for _ in range(cap):
        pt = []
        for _ in range(k):
            state = (state * 6364136223846793005 + 1442695040888963407) \
                % (1 << 64)
            pt.append((state >> 32) % p)
        out.append(tuple(pt))
    return out


def _gcd_z_degree_zero_witness_field(dom, f, g, nvars):
    """Field-coefficient analogue of the z-degree-0 certificate.

    Points are drawn from GF(p) first and then from a small extension
    GF(p^k): over tiny prime fields the usable points run out fast, but
    the leading-coefficient argument is insensitive to the field the
    point lives in, so extension points certify just as well.
    """
    p = dom.p
    dzf = max(e[-1] for e in f)
    dzg = max(e[-1] for e in g)
    if dzf == 0 or dzg == 0:
        return False
    for vals in _field_witness_points(p, nvars - 1, cap=8):
        uf = _eval_to_univar(f, vals, dzf, p)
        ug = _eval_to_univar(g, vals, dzg, p)
        if uf[-1] == 0 or ug[-1] == 0:
            continue
        if _univar_gcd_degree_mod_p(uf, ug, p) == 0:
            return True
    ext = _ext_field(p)
    for _ in range(4):
        vals = [ext.random_element() for _ in range(nvars - 1)]
        uf = _eval_to_univar_ext(ext, f, vals, dzf)
        ug = _eval_to_univar_ext(ext, g, vals, dzg)
        if uf[-1] == ext.zero or ug[-1] == ext.zero:
            continue
        if _univar_gcd_degree_ext(ext, uf, ug) == 0:
            return True
    return False


# -- GF(p^k) just big enough for reliable witness evaluations --------------

class _ExtField:
    """Arithmetic in GF(p^k); elements are coefficient tuples of length k."""

    def __init__(self, p, k):
        self.p = p
        self.k = k
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        self._state = 0x9E3779B97F4A7C15
        self.modpoly = self._find_irreducible()

    def _rand_int(self, bound):
        self._state = (self._state * 6364136223846793005
                       + 1442695040888963407) % (1 << 64)
        return (self._state >> 32) % bound

    def random_element(self):
        return tuple(self._rand_int(self.p) for _ in range(self.k))

    def embed(self, c):
        return (c % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        mp = self.modpoly
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i] % p
            if c:
                for j in range(k):
                    conv[i - k + j] -= c * mp[j]
            conv[i] = 0
        return tuple(v % p for v in conv[:k])

    def pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        return self.pow(a, self.p ** self.k - 2)

    def _find_irreducible(self):
        # monic x^k + tail; Rabin irreducibility test
        p, k = self.p, self.k
        while True:
            tail = [self._rand_int(p) for _ in range(k)]
            if tail[0] == 0:
                continue
            if self._is_irreducible(tail):
                return tuple(tail)

    def _is_irreducible(self, tail):
        p, k = self.p, self.k

        def polymulmod(a, b):
            conv = [0] * (2 * k - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            conv[i + j] += x * y
            for i in range(2 * k - 2, k - 1, -1):
                c = conv[i] % p
                if c:
                    for j in range(k):
                        conv[i - k + j] -= c * tail[j]
                conv[i] = 0
            return [v % p for v in conv[:k]]

        def xq_pow(e):
            # x^(p^e) mod (x^k + tail), computed by iterated p-th powers
            cur = [0, 1] + [0] * (k - 2) if k > 1 else [(-tail[0]) % p]
            for _ in range(e):
                acc = [1] + [0] * (k - 1)
                base = cur
                m = p
                while m:
                    if m & 1:
                        acc = polymulmod(acc, base)
                    base = polymulmod(base, base)
                    m >>= 1
                cur = acc
            return cur

        # x^(p^k) == x required
        xpk = xq_pow(k)
        if xpk != [0, 1] + [0] * (k - 2):
            return False
        # gcd(x^(p^(k/q)) - x, f) must be constant for prime q | k
        for q in _prime_divisors(k):
            diff = xq_pow(k // q)
            diff[1] = (diff[1] - 1) % p
            if any(diff):
                # gcd(f, diff) over GF(p): f irreducible iff coprime
                if _univar_gcd_degree_mod_p(
                        list(tail) + [1], diff, p) != 0:
                    return False
            else:
                return False
        return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_EXT_FIELDS = {}


def _ext_field(p):
    field = _EXT_FIELDS.get(p)
    if field is None:
        k = 2
        while p ** k < (1 << 20):
            k += 1
        field = _ExtField(p, k)
        _EXT_FIELDS[p] = field
    return field


def _eval_to_univar_ext(ext, f, vals, dz):
    out = [ext.zero] * (dz + 1)
    caches = [{0: ext.one, 1: v} for v in vals]

    def power(i, e):
        cache = caches[i]
        got = cache.get(e)
        if got is None:
            got = ext.mul(power(i, e - 1), cache[1])
            cache[e] = got
        return got

    for e, c in f.items():
        term = ext.embed(c)
        for i, ei in enumerate(e[:-1]):
            if ei:
                term = ext.mul(term, power(i, ei))
        out[e[-1]] = ext.add(out[e[-1]], term)
    return out


def _univar_gcd_degree_ext(ext, a, b):
    def trim(x):
        while x and x[-1] == ext.zero:
            x.pop()
        return x

    a = trim(a[:])
    b = trim(b[:])
    while b:
        inv = ext.inv(b[-1])
        while len(a) >= len(b):
            factor = ext.mul(a[-1], inv)
            if factor != ext.zero:
                shift = len(a) - len(b)
                for i in range(len(b) - 1):
                    a[shift + i] = ext.sub(a[shift + i],
                                           ext.mul(factor, b[i]))
            a.pop()
        trim(a)
        a, b = b, a
    return len(a) - 1


def _univar_gcd_degree_mod_p(a, b, p):
    def trim(x):
        while x and not x[-1]:
            x.pop()
        return x

    a = trim(a[:])
    b = trim(b[:])
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            factor = (a[-1] * inv) % p
            if factor:
                shift = len(a) - len(b)
                for i, c in enumerate(b):
                    if i < len(b) - 1 and c:
                        a[shift + i] = (a[shift + i] - factor * c) % p
            a.pop()
        trim(a)
        a, b = b, a
    return len(a) - 1


def _to_univar(f, nvars):
    """Split off the last variable: list of raw polys in nvars-1 variables."""
    deg = max(e[-1] for e in f)
    coeffs = [{} for _ in range(deg + 1)]
    for e, c in f.items():
        coeffs[e[-1]][e[:-1]] = c
    return coeffs


def _from_univar(coeffs):
    f = {}
    for d, poly in enumerate(coeffs):
        for e, c in poly.items():
            f[e + (d,)] = c
    return f


def _udeg(coeffs):
    for d in range(len(coeffs) - 1, -1, -1):
        if coeffs[d]:
            return d
    return -1


def _utrim(coeffs):
    d = _udeg(coeffs)
    return coeffs[:d + 1]


def _ushift_mul(dom, coeffs, poly, shift):
    """coeffs(y) * poly * y^shift for a raw-poly scalar `poly`."""
    out = [{} for _ in range(shift)]
    out.extend(p_mul(dom, c, poly) for c in coeffs)
    return out


def _pseudo_rem(dom, A, B):
    """prem(A, B) = lc(B)^(deg A - deg B + 1) * A  mod B, in R[y]."""
    dA, dB = _udeg(A), _udeg(B)
    lb = B[dB]
    d = dA - dB + 1
    r = list(A)
    e = 0
    while True:
        dr = _udeg(r)
        if dr < dB:
            break
        lr = r[dr]
        r = [p_mul(dom, c, lb) for c in r]
        sub = _ushift_mul(dom, B, lr, dr - dB)
        for i, s in enumerate(sub):
            if s:
                r[i] = p_sub(dom, r[i], s)
        e += 1
    if e < d:
        scale = p_pow(dom, lb, d - e, _poly_nvars(lb))
        r = [p_mul(dom, c, scale) for c in r]
    return _utrim(r)


def _poly_nvars(f):
    for e in f:
        return len(e)
    return 0


def _ucontent(dom, coeffs, nvars):
    cont = {}
    for c in coeffs:
        if c:
            cont = p_gcd(dom, cont, c, nvars)
            if len(cont) == 1 and sum(max(cont)) == 0 and cont[max(cont)] == dom.one:
                break
    return cont


def _subresultant_prs(dom, A, B, nvars):
    """Last nonzero member of the subresultant PRS of primitive A, B."""
    one = p_const(dom.one, nvars)
    g = one
    h = one
    while True:
        dA, dB = _udeg(A), _udeg(B)
        delta = dA - dB
        R = _pseudo_rem(dom, A, B)
        if _udeg(R) < 0:
            return B
        divisor = p_mul(dom, g, p_pow(dom, h, delta, nvars))
        Bn = [p_divexact(dom, c, divisor) if c else {} for c in R]
        A, B = B, _utrim(Bn)
        g = A[_udeg(A)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = p_divexact(dom, p_pow(dom, g, delta, nvars),
                           p_pow(dom, h, delta - 1, nvars))
        # delta == 0: h unchanged


def _monomial_gcd(dom, f, g):
    out_exp = None
    for e in f:
        out_exp = e if out_exp is None else tuple(map(min, out_exp, e))
    for e in g:
        out_exp = tuple(map(min, out_exp, e))
    c = dom.gcd(p_scalar_content(dom, f), p_scalar_content(dom, g))
    return {out_exp: c}


def p_gcd(dom, f, g, nvars):
    """Gcd of raw polynomials, unit-normalized (includes scalar content)."""
    if not f:
        return p_normal(dom, g)
    if not g:
        return p_normal(dom, f)
    if nvars == 0:
        return {(): dom.gcd(f[()], g[()])}
    if len(f) == 1 or len(g) == 1:
        return _monomial_gcd(dom, f, g)

    if not dom.is_field and nvars == 1:
        uf = [0] * (max(e[0] for e in f) + 1)
        for e, c in f.items():
            uf[e[0]] = c % _WITNESS_P
        ug = [0] * (max(e[0] for e in g) + 1)
        for e, c in g.items():
            ug[e[0]] = c % _WITNESS_P
        if uf[-1] and ug[-1] \
                and _univar_gcd_degree_mod_p(uf, ug, _WITNESS_P) == 0:
            c = dom.gcd(p_scalar_content(dom, f), p_scalar_content(dom, g))
            return {(0,): c}

    if nvars >= 2:
        if dom.is_field:
            certified = _gcd_z_degree_zero_witness_field(dom, f, g, nvars)
        else:
            certified = _gcd_z_degree_zero_witness(f, g, nvars)
        if certified:
            # the gcd does not involve the last variable, so it equals
            # the gcd of the two contents w.r.t. that variable
            contf = _ucontent(dom, _to_univar(f, nvars), nvars - 1)
            contg = _ucontent(dom, _to_univar(g, nvars), nvars - 1)
            sub = p_gcd(dom, contf, contg, nvars - 1)
            return p_normal(dom, {e + (0,): c for e, c in sub.items()})

    A = _to_univar(f, nvars)
    B = _to_univar(g, nvars)
    if _udeg(A) < _udeg(B):
        A, B = B, A
    contA = _ucontent(dom, A, nvars - 1)
    contB = _ucontent(dom, B, nvars - 1)
    ppA = [p_divexact(dom, c, contA) if c else {} for c in A]
    ppB = [p_divexact(dom, c, contB) if c else {} for c in B]
    cont = p_gcd(dom, contA, contB, nvars - 1)

    if _udeg(ppB) == 0:
        # primitive and constant in the last variable: gcd has no y part
        prim = [p_const(dom.one, nvars - 1)]
    else:
        raw = _subresultant_prs(dom, ppA, ppB, nvars - 1)
        rc = _ucontent(dom, raw, nvars - 1)
        prim = [p_divexact(dom, c, rc) if c else {} for c in raw]

    lifted = _from_univar([p_mul(dom, c, cont) for c in prim])
    return p_normal(dom, lifted)


def p_gcd_list(dom, polys, nvars):
    """Gcd of a list of raw polynomials (zero entries ignored)."""
    acc = {}
    for f in polys:
        if not f:
            continue
        acc = p_gcd(dom, acc, f, nvars)
        if len(acc) == 1:
            e = max(acc)
            if sum(e) == 0 and acc[e] == dom.one:
                break
    return acc
