"""Dense univariate polynomials over Q with exact arithmetic.

Coefficients are ``fractions.Fraction`` stored lowest degree first.
Factorisation over Q goes through Z[X]: reduction modulo a good prime,
Cantor-Zassenhaus, linear multifactor Hensel lifting, and naive factor
recombination. Degrees stay small here, so nothing fancier is needed.
"""

from fractions import Fraction
from math import gcd, isqrt

from .rng import Stream


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Polynomial:
    """Immutable dense polynomial over Q, coefficients lowest first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial([])

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial([1])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial([0, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        l = self.coeffs[-1]
        return Polynomial([c / l for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __add__(self, other) -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial([
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        ])

    def __sub__(self, other) -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.coeffs[-1]
        if len(rem) - 1 < d:
            return Polynomial.zero(), self
        quo = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            if c:
                quo[i - d] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] -= c * oc
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; works for Fraction and any ring element."""
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * x + c
        if out is None:
            return Fraction(0)
        return out

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*X" if c != 1 else "X")
            else:
                terms.append(f"{c}*X^{i}" if c != 1 else f"X^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_separable(p: Polynomial) -> bool:
    """True iff p has no repeated roots, i.e. gcd(p, p') = 1."""
    if p.degree() < 1:
        raise ValueError("separability is defined for nonconstant polynomials")
    return poly_gcd(p, p.derivative()).degree() == 0


def resultant(a: Polynomial, b: Polynomial) -> Fraction:
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    res = Fraction(1)
    while b.degree() > 0:
        r = a % b
        if r.is_zero():
            return Fraction(0)
        res *= b.lc() ** (a.degree() - r.degree())
        if (a.degree() * b.degree()) % 2:
            res = -res
        a, b = b, r
    return res * b.coeffs[0] ** a.degree()


def discriminant(p: Polynomial) -> Fraction:
    """disc(p) = (-1)^(d(d-1)/2) res(p, p') / lc(p)."""
    d = p.degree()
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc()


# ---------------------------------------------------------------------------
# GF(p) polynomial helpers: lists of ints in [0, p), lowest degree first.


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gf_trim(out)


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _gf_trim(out)


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    rem = list(a)
    d = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    if len(rem) - 1 < d:
        return [], _gf_trim(rem)
    quo = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i] * inv % p
        if c:
            quo[i - d] = c
            for j, bc in enumerate(b):
                rem[i - d + j] = (rem[i - d + j] - c * bc) % p
    return _gf_trim(quo), _gf_trim(rem)


def _gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _gf_gcd(a, b, p):
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_pow_mod(a, n, mod, p):
    out = [1]
    a = _gf_divmod(a, mod, p)[1]
    while n:
        if n & 1:
            out = _gf_divmod(_gf_mul(out, a, p), mod, p)[1]
        a = _gf_divmod(_gf_mul(a, a, p), mod, p)[1]
        n >>= 1
    return out


def _gf_equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles, p odd."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p ** d - 1) // 2
    while True:
        a = [rng.randint(0, p - 1) for _ in range(n)]
        a = _gf_trim(a)
        if len(a) - 1 < 1:
            continue
        b = _gf_pow_mod(a, e, f, p)
        w = _gf_gcd(_gf_sub(b, [1], p), f, p)
        if 0 < len(w) - 1 < n:
            q = _gf_divmod(f, w, p)[0]
            return (_gf_equal_degree_split(w, d, p, rng)
                    + _gf_equal_degree_split(_gf_monic(q, p), d, p, rng))


def _gf_factor_squarefree(f, p, rng):
    """Distinct-degree then equal-degree factorisation of monic squarefree f."""
    out = []
    v = list(f)
    h = [0, 1]
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            out.append(v)
            break
        h = _gf_pow_mod(h, p, v, p)
        g = _gf_gcd(_gf_sub(h, [0, 1], p), v, p)
        if len(g) - 1 > 0:
            out.extend(_gf_equal_degree_split(g, d, p, rng))
            v = _gf_monic(_gf_divmod(v, g, p)[0], p)
            h = _gf_divmod(h, v, p)[1]
    return out


# ---------------------------------------------------------------------------
# Z[X] machinery for Zassenhaus.


def _int_content(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g or 1


def _int_poly_divmod(a, b):
    """Exact-arithmetic division in Q, inputs integer lists lowest first."""
    pa = Polynomial(a)
    pb = Polynomial(b)
    q, r = divmod(pa, pb)
    return q, r


def _centered(c: int, q: int) -> int:
    c %= q
    return c - q if c > q // 2 else c


def _norm2_ceil(a) -> int:
    s = sum(c * c for c in a)
    r = isqrt(s)
    return r if r * r == s else r + 1


_SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127]


def _gf_invmod(a, mod, p):
    """Inverse of a modulo mod over F_p (they must be coprime)."""
    a0, a1 = _gf_divmod(a, mod, p)[1], list(mod)
    s0, s1 = [1], []
    while a1:
        q, rem = _gf_divmod(a0, a1, p)
        a0, a1 = a1, rem
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
    if len(a0) != 1:
        raise ArithmeticError("elements not coprime")
    return _gf_mul(s0, [pow(a0[0], p - 2, p)], p)


def _hensel_lift(fz, gs, p, target):
    """Lift fz = lc * prod(gs) from mod p to mod p^k >= target, gs monic.

    Linear multifactor lifting: each step solves a partial fraction
    decomposition of the error over F_p.
    """
    lc = fz[-1]
    lc_inv = pow(lc % p, p - 2, p)
    r = len(gs)
    us = []
    for i in range(r):
        w = [1]
        for j in range(r):
            if j != i:
                w = _gf_mul(w, gs[j], p)
        us.append(_gf_invmod(w, gs[i], p))
    gs = [list(g) for g in gs]
    q = p
    while q < target:
        prod = [lc]
        for g in gs:
            prod = _poly_int_mul(prod, g)
        e = [(a - b) % (q * p)
             for a, b in zip(_pad(fz, len(prod)), _pad(prod, len(fz)))]
        err = [(c // q) * lc_inv % p for c in e]
        err = _gf_trim(err)
        for i in range(r):
            d = _gf_divmod(_gf_mul(err, us[i], p), gs[i], p)[1]
            for k, dc in enumerate(d):
                gs[i][k] = (gs[i][k] + q * dc) % (q * p)
        q *= p
    return gs, q


def _pad(a, n):
    return list(a) + [0] * max(0, n - len(a))


def _poly_int_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _is_small_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in range(2, isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def _good_primes(fz):
    """Odd primes not dividing lc for which fz stays squarefree mod p."""
    lc = fz[-1]
    cands = list(_SMALL_PRIMES)
    n = 131
    while len(cands) < 100:
        if _is_small_prime(n):
            cands.append(n)
        n += 2
    for p in cands:
        if lc % p == 0:
            continue
        fb = [c % p for c in fz]
        fb = _gf_trim(list(fb))
        if len(fb) - 1 != len(fz) - 1:
            continue
        db = _gf_trim([i * c % p for i, c in enumerate(fz)][1:])
        if len(_gf_gcd(fb, db, p)) == 1:
            yield p


def _zassenhaus(fz):
    """Factor a primitive squarefree integer polynomial, positive lc.

    Returns a list of primitive integer factors (lists, lowest first).
    """
    n = len(fz) - 1
    if n <= 1:
        return [list(fz)]
    p = next(_good_primes(fz))
    rng = Stream((p << 32) ^ (sum(abs(c) for c in fz) & 0xFFFFFFFF))
    fb = _gf_monic([c % p for c in fz], p)
    gs = _gf_factor_squarefree(fb, p, rng)
    gs.sort(key=lambda g: (len(g), tuple(g)))
    if len(gs) == 1:
        return [list(fz)]
    lc = fz[-1]
    bound = 2 * abs(lc) * (1 << n) * _norm2_ceil(fz) + 1
    gs, q = _hensel_lift(fz, gs, p, bound)

    from itertools import combinations

    result = []
    f_cur = list(fz)
    indices = list(range(len(gs)))
    s = 1
    while 2 * s <= len(indices):
        found = False
        for subset in combinations(indices, s):
            cand = [f_cur[-1]]
            for i in subset:
                cand = [c % q for c in _poly_int_mul(cand, gs[i])]
            cand = [_centered(c, q) for c in cand]
            cont = _int_content(cand)
            if cand[-1] < 0:
                cont = -cont
            h = [c // cont for c in cand]
            quo, rem = _int_poly_divmod(f_cur, h)
            if rem.is_zero():
                result.append(h)
                f_cur = [int(c) for c in quo.coeffs]
                indices = [i for i in indices if i not in subset]
                found = True
                break
        if not found:
            s += 1
    if len(f_cur) - 1 > 0:
        result.append(f_cur)
    return result


def _squarefree_decomposition(f: Polynomial):
    """Yun's algorithm on a monic polynomial; yields (factor, multiplicity)."""
    out = []
    u = poly_gcd(f, f.derivative())
    c = f // u
    d = (f.derivative() // u) - c.derivative()
    i = 1
    while c.degree() > 0:
        a = poly_gcd(c, d)
        if a.degree() > 0:
            out.append((a, i))
        c = c // a
        d = (d // a) - c.derivative()
        i += 1
    return out


def _to_primitive_int(f: Polynomial):
    """Scale a rational polynomial to a primitive integer list, lc > 0."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    cont = _int_content(ints)
    if ints[-1] < 0:
        cont = -cont
    return [c // cont for c in ints]


def poly_factor(p: Polynomial):
    """Irreducible monic factors of p over Q with multiplicities.

    The product of factor^multiplicity times lc(p) reassembles p exactly.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out = []
    if p.degree() == 0:
        return out
    for sq, mult in _squarefree_decomposition(p.monic()):
        for h in _zassenhaus(_to_primitive_int(sq)):
            out.append((Polynomial(h).monic(), mult))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].coeffs))
    return out
