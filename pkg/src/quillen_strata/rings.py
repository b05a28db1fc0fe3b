"""Exact arithmetic over Z, Q, F_q and cyclotomic fields.

Polynomials are coefficient tuples in ascending degree over a small domain
object.  Factorization over prime fields is distinct-degree followed by
Cantor-Zassenhaus equal-degree splitting with a deterministic seeded RNG;
factor lists are always returned in canonical order, so every result here is
reproducible bit for bit.
"""

from __future__ import annotations

import math
import random
import zlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

MAX_CYCLOTOMIC = 4096
MAX_CONDUCTOR = 64
MAX_SPECTRUM_N = 64
MAX_PRIME_BOUND = 1000


class RingError(Exception):
    """Arithmetic precondition failure (bounds, non-monic divisor, ...)."""


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def primes_upto(bound):
    return [q for q in range(2, bound + 1) if is_prime(q)]


def euler_phi(n):
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def multiplicative_order(q, d):
    """Order of q modulo d (d >= 1, gcd(q, d) = 1)."""
    if d == 1:
        return 1
    if math.gcd(q, d) != 1:
        raise RingError("gcd(%d, %d) != 1" % (q, d))
    k = 1
    cur = q % d
    while cur != 1:
        cur = (cur * q) % d
        k += 1
    return k


# -- coefficient domains -----------------------------------------------------

class ZZ:
    name = "Z"
    is_field = False
    zero = 0
    one = 1

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def of_int(n):
        return n

    @staticmethod
    def repr_elem(a):
        return str(a)


class QQ:
    name = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / Fraction(a)

    @staticmethod
    def of_int(n):
        return Fraction(n)

    @staticmethod
    def repr_elem(a):
        return str(a)


class GF:
    """The field with q = p^f elements (q <= 2^16).

    Elements are integers in [0, q); for f >= 2 the integer encodes the
    coefficient vector in base p with respect to the canonical modulus (the
    lexicographically least monic irreducible of degree f over F_p).
    """

    is_field = True

    def __init__(self, p, f=1):
        if not is_prime(p):
            raise RingError("%d is not prime" % p)
        if p ** f > 1 << 16:
            raise RingError("field size %d exceeds 2^16" % p ** f)
        self.p = p
        self.f = f
        self.q = p ** f
        self.zero = 0
        self.one = 1
        self.name = "F_%d" % self.q
        self.modulus = _gf_modulus(p, f) if f > 1 else None

    def _decode(self, a):
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, vec):
        out = 0
        for c in reversed(vec):
            out = out * self.p + (c % self.p)
        return out

    def add(self, a, b):
        if self.f == 1:
            return (a + b) % self.p
        va, vb = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a):
        if self.f == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def mul(self, a, b):
        if self.f == 1:
            return (a * b) % self.p
        va, vb = self._decode(a), self._decode(b)
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce modulo the monic modulus
        mod = self.modulus
        for i in range(len(prod) - 1, self.f - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, mc in enumerate(mod[:-1]):
                    prod[i - self.f + j] = (prod[i - self.f + j] - c * mc) % self.p
        return self._encode(prod[: self.f])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %s" % self.name)
        # a^(q-2)
        out = 1
        base = a
        e = self.q - 2
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def of_int(self, n):
        return n % self.p

    def power(self, a, e):
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def gen(self):
        """The class of the variable in F_p[t]/(modulus); 0 generator for f=1."""
        return self.p if self.f > 1 else 0

    def elements(self):
        return range(self.q)

    def in_prime_field(self, a):
        return a < self.p

    def repr_elem(self, a):
        if self.f == 1:
            return str(a)
        vec = self._decode(a)
        terms = []
        for i in range(self.f - 1, -1, -1):
            c = vec[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else "a^%d" % i
                terms.append(var if c == 1 else "%d*%s" % (c, var))
        return "+".join(terms) if terms else "0"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash(("GF", self.p, self.f))

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def _gf_modulus(p, f):
    """Lexicographically least monic irreducible of degree f over F_p."""
    base = GF(p)
    for tail in _tuples_ascending(p, f):
        cand = Poly(tail + (1,), base)
        if is_irreducible(cand):
            return tail + (1,)
    raise RingError("no irreducible modulus found (impossible)")


def _tuples_ascending(p, f):
    for enc in range(p ** f):
        vec = []
        e = enc
        for _ in range(f):
            vec.append(e % p)
            e //= p
        yield tuple(reversed(vec))


class CycloField:
    """Q(zeta_m): rationals adjoined a primitive m-th root of unity.

    Elements are coefficient tuples of length phi(m) in the power basis of
    Q[Y]/(Phi_m(Y)).
    """

    is_field = True

    def __init__(self, m):
        if m < 1 or m > MAX_CONDUCTOR:
            raise RingError("conductor %d out of range" % m)
        self.m = m
        self.phi = euler_phi(m)
        self.modulus = tuple(Fraction(c) for c in cyclotomic_poly(m).coeffs)
        self.zero = (Fraction(0),) * self.phi
        self.one = self._embed_int(1)
        self.name = "Q(zeta_%d)" % m

    def _embed_int(self, n):
        return (Fraction(n),) + (Fraction(0),) * (self.phi - 1)

    def of_int(self, n):
        return self._embed_int(n)

    def zeta(self):
        if self.phi == 1:
            # zeta_1 = 1, zeta_2 = -1
            return self._embed_int(1 if self.m == 1 else -1)
        return (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.phi - 2)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for i in range(len(prod) - 1, self.phi - 1, -1):
            c = prod[i]
            if c:
                prod[i] = Fraction(0)
                for j in range(self.phi):
                    prod[i - self.phi + j] -= c * self.modulus[j]
        return tuple(prod[: self.phi])

    def inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError("inverse of zero in %s" % self.name)
        # extended Euclid in Q[Y] against Phi_m
        r0 = list(self.modulus)
        r1 = list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(x != 0 for x in r1):
            q, r = _qq_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qq_poly_sub(s0, _qq_poly_mul(q, s1))
        # r0 is the gcd, a nonzero constant (Phi_m is irreducible over Q)
        lead = next(x for x in reversed(r0) if x != 0)
        inv = [x / lead for x in s0]
        inv = inv[: self.phi] + [Fraction(0)] * max(0, self.phi - len(inv))
        # reduce (degree < phi already ensured by Euclid)
        return tuple(inv[: self.phi])

    def power(self, a, e):
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def repr_elem(self, a):
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "zeta" if i == 1 else "zeta^%d" % i
                terms.append(var if c == 1 else "%s*%s" % (c, var))
        return "+".join(terms) if terms else "0"

    def __eq__(self, other):
        return isinstance(other, CycloField) and self.m == other.m

    def __hash__(self):
        return hash(("CycloField", self.m))

    def __repr__(self):
        return self.name


def _qq_poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _qq_poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _qq_poly_trim(out)


def _qq_poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _qq_poly_trim(out)


def _qq_poly_divmod(a, b):
    a = list(a)
    b = _qq_poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = _qq_poly_trim(a)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        d = len(r) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            r[d + i] -= c * x
        r = _qq_poly_trim(r)
    return _qq_poly_trim(q), r


# -- polynomials -------------------------------------------------------------

@dataclass(frozen=True)
class Poly:
    """A dense univariate polynomial; coeffs ascending, no trailing zeros."""

    coeffs: tuple
    dom: object

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == self.dom.zero:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (self.dom.one,)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.dom.one

    def leading(self):
        return self.coeffs[-1]

    @staticmethod
    def zero(dom):
        return Poly((), dom)

    @staticmethod
    def one(dom):
        return Poly((dom.one,), dom)

    @staticmethod
    def x(dom):
        return Poly((dom.zero, dom.one), dom)

    @staticmethod
    def from_ints(ints, dom):
        return Poly(tuple(dom.of_int(n) for n in ints), dom)

    def map_domain(self, dom, conv):
        return Poly(tuple(conv(c) for c in self.coeffs), dom)

    def __add__(self, other):
        dom = self.dom
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else dom.zero
            b = other.coeffs[i] if i < len(other.coeffs) else dom.zero
            out.append(dom.add(a, b))
        return Poly(tuple(out), dom)

    def __neg__(self):
        return Poly(tuple(self.dom.neg(c) for c in self.coeffs), self.dom)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        dom = self.dom
        if self.is_zero() or other.is_zero():
            return Poly.zero(dom)
        out = [dom.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x != dom.zero:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = dom.add(out[i + j], dom.mul(x, y))
        return Poly(tuple(out), dom)

    def scale(self, c):
        dom = self.dom
        return Poly(tuple(dom.mul(c, x) for x in self.coeffs), dom)

    def shift(self, k):
        """Multiply by X^k."""
        if self.is_zero():
            return self
        return Poly((self.dom.zero,) * k + self.coeffs, self.dom)

    def divmod(self, divisor):
        """Polynomial division; requires a monic divisor or a field domain."""
        dom = self.dom
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not divisor.is_monic():
            if not dom.is_field:
                raise RingError("non-monic divisor over non-field %s" % dom.name)
            inv_lead = dom.inv(divisor.leading())
        else:
            inv_lead = dom.one
        rem = list(self.coeffs)
        dq = divisor.degree
        if self.degree < dq:
            return Poly.zero(dom), self
        quot = [dom.zero] * (self.degree - dq + 1)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == dom.zero:
                continue
            c = dom.mul(c, inv_lead)
            quot[i - dq] = c
            for j, dcoef in enumerate(divisor.coeffs):
                rem[i - dq + j] = dom.add(rem[i - dq + j], dom.neg(dom.mul(c, dcoef)))
        return Poly(tuple(quot), dom), Poly(tuple(rem), dom)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise RingError("inexact polynomial division")
        return q

    def derivative(self):
        dom = self.dom
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            term = dom.zero
            for _ in range(i):
                term = dom.add(term, c)
            out.append(term)
        return Poly(tuple(out), dom)

    def monic(self):
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.dom.inv(self.leading()))

    def evaluate(self, point):
        dom = self.dom
        acc = dom.zero
        for c in reversed(self.coeffs):
            acc = dom.add(dom.mul(acc, point), c)
        return acc

    def pretty(self, var="X"):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == self.dom.zero:
                continue
            cs = self.dom.repr_elem(c)
            if i == 0:
                terms.append(cs)
            else:
                xs = var if i == 1 else "%s^%d" % (var, i)
                terms.append(xs if cs == "1" else "%s*%s" % (cs, xs))
        return "+".join(terms)

    def __repr__(self):
        return "Poly(%s over %s)" % (self.pretty(), self.dom.name)


def poly_gcd(a, b):
    """Monic gcd over a field domain."""
    if not a.dom.is_field:
        raise RingError("gcd needs a field domain")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def powmod(base, e, mod):
    out = Poly.one(base.dom)
    base = base % mod
    while e:
        if e & 1:
            out = (out * base) % mod
        base = (base * base) % mod
        e >>= 1
    return out


def compose_mod(f, t, mod):
    """f(t) modulo mod, by Horner in the quotient ring."""
    dom = f.dom
    acc = Poly.zero(dom)
    for c in reversed(f.coeffs):
        acc = (acc * t + Poly((c,), dom)) % mod
    return acc


# -- irreducibility and factorization over finite fields ----------------------

def is_irreducible(f):
    """Rabin's test: f of degree k over F_q is irreducible iff X^{q^k} = X
    (mod f) and gcd(f, X^{q^{k/l}} - X) = 1 for every prime l | k."""
    dom = f.dom
    k = f.degree
    if k <= 0:
        return False
    if k == 1:
        return True
    q = dom.q
    x = Poly.x(dom)
    for l in sorted({l for l in range(2, k + 1) if k % l == 0 and is_prime(l)}):
        h = powmod(x, q ** (k // l), f) - x
        if poly_gcd(f, h).degree != 0:
            return False
    return powmod(x, q ** k, f) == (powmod(x, 1, f))


# low-level F_p arithmetic on int coefficient lists (hot path of factor)

def _zp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zp_trim([c % p for c in out])


def _zp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _zp_trim(out)


def _zp_monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _zp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _zp_trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if not c:
            continue
        c = c * inv % p
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _zp_trim(q), _zp_trim([c % p for c in a])


def _zp_gcd(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    _zp_trim(a)
    _zp_trim(b)
    while b:
        a, b = b, _zp_divmod(a, b, p)[1]
    return _zp_monic(a, p)


def _zp_powmod(base, e, mod, p):
    out = [1]
    base = _zp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _zp_divmod(_zp_mul(out, base, p), mod, p)[1]
        base = _zp_divmod(_zp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def _zp_deriv(a, p):
    return _zp_trim([c * i % p for i, c in enumerate(a)][1:])


def _zp_squarefree(f, p):
    """[(g, e)] with f = prod g^e, g monic squarefree pairwise coprime."""
    f = _zp_monic(f, p)
    out = []
    c = _zp_gcd(f, _zp_deriv(f, p), p)
    w = _zp_divmod(f, c, p)[0]
    i = 1
    while w != [1]:
        y = _zp_gcd(w, c, p)
        z = _zp_divmod(w, y, p)[0]
        if z != [1]:
            out.append((z, i))
        i += 1
        w = y
        c = _zp_divmod(c, y, p)[0]
    if c != [1]:
        # c = h(X^p) = h(X)^p over F_p
        root = [c[j] for j in range(0, len(c), p)]
        for g, e in _zp_squarefree(root, p):
            out.append((g, e * p))
    return out


def _zp_distinct_degree(f, p):
    """[(product of same-degree irreducibles, degree)] for monic squarefree f."""
    out = []
    h = [0, 1]
    g = list(f)
    k = 0
    while len(g) - 1 >= 2 * (k + 1):
        k += 1
        h = _zp_powmod(h, p, g, p)
        d = _zp_gcd(g, _zp_sub(h, [0, 1], p), p)
        if len(d) > 1:
            out.append((d, k))
            g = _zp_divmod(g, d, p)[0]
            h = _zp_divmod(h, g, p)[1]
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _zp_equal_degree(f, k, p, rng):
    """Cantor-Zassenhaus split of a product of degree-k irreducibles."""
    if len(f) - 1 == k:
        return [_zp_monic(f, p)]
    while True:
        r = _zp_trim([rng.randrange(p) for _ in range(len(f) - 1)])
        if len(r) < 2:
            continue
        if p % 2 == 1:
            s = _zp_sub(_zp_powmod(r, (p ** k - 1) // 2, f, p), [1], p)
        else:
            # trace map for characteristic 2 (add == sub)
            s = []
            t = _zp_divmod(r, f, p)[1]
            for _ in range(k):
                s = _zp_sub(s, t, p)
                t = _zp_divmod(_zp_mul(t, t, p), f, p)[1]
        d = _zp_gcd(f, s, p)
        if 1 < len(d) < len(f):
            rest = _zp_divmod(f, d, p)[0]
            return _zp_equal_degree(d, k, p, rng) + _zp_equal_degree(rest, k, p, rng)


def factor_count(f):
    """Number of irreducible factors (with multiplicity collapsed to distinct
    squarefree parts) of f over F_p, without the equal-degree splitting."""
    dom = f.dom
    if not dom.is_field or dom.f != 1:
        raise RingError("factor_count is implemented over prime fields only")
    p = dom.p
    count = 0
    for g, _ in _zp_squarefree([c % p for c in f.coeffs], p):
        for part, k in _zp_distinct_degree(g, p):
            count += (len(part) - 1) // k
    return count


def factor(f):
    """Full factorization over F_p: [(monic irreducible, multiplicity)] sorted."""
    dom = f.dom
    if not dom.is_field or dom.f != 1:
        raise RingError("factor is implemented over prime fields only")
    if f.degree < 1:
        raise RingError("cannot factor a constant")
    p = dom.p
    seed = zlib.adler32(repr((dom.q, f.coeffs)).encode()) ^ 0x5EED
    rng = random.Random(seed)
    out = []
    for g, e in _zp_squarefree([c % p for c in f.coeffs], p):
        for part, k in _zp_distinct_degree(g, p):
            for irr in _zp_equal_degree(part, k, p, rng):
                out.append((Poly(tuple(irr), dom), e))
    return sorted(out, key=lambda t: (t[0].degree, t[0].coeffs))


def is_squarefree_mod(f):
    """gcd(f, f') = 1 over a prime field."""
    return poly_gcd(f, f.derivative()).degree == 0


# -- cyclotomic polynomials and prime splitting -------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(d):
    """The d-th cyclotomic polynomial over Z, via X^d - 1 = prod_{e|d} Phi_e."""
    if d < 1 or d > MAX_CYCLOTOMIC:
        raise RingError("cyclotomic index %d out of range" % d)
    f = Poly.from_ints([-1] + [0] * (d - 1) + [1], ZZ)
    for e in range(1, d):
        if d % e == 0:
            f = f // cyclotomic_poly(e)
    return f


@dataclass(frozen=True)
class SplittingData:
    d: int
    q: int
    count: int
    residue_degree: int


def prime_splitting(d, q):
    """How the rational prime q splits in Z[zeta_d] (q coprime to d).

    There are phi(d)/ord_d(q) primes above q, each with residue degree
    ord_d(q).  The brute-force check is the factorization of Phi_d mod q.
    """
    if d < 1:
        raise RingError("d must be positive")
    if math.gcd(q, d) != 1:
        raise RingError("prime %d divides conductor %d" % (q, d))
    f = multiplicative_order(q, d)
    return SplittingData(d=d, q=q, count=euler_phi(d) // f, residue_degree=f)


def cyclotomic_factors_mod(d, q):
    """The distinct monic irreducible factors of Phi_d mod q, sorted."""
    dom = GF(q)
    f = cyclotomic_poly(d).map_domain(dom, dom.of_int)
    if f.degree == 0:
        return []
    return [g for g, _ in factor(f)]


# -- level-structure polynomials ----------------------------------------------

def p_series_mult(p):
    """(1+X)^p - 1 over Z: the p-series of the multiplicative formal group."""
    if not is_prime(p):
        raise RingError("%d is not prime" % p)
    coeffs = [0] * (p + 1)
    for i in range(1, p + 1):
        coeffs[i] = math.comb(p, i)
    return Poly.from_ints(coeffs, ZZ)


@dataclass(frozen=True)
class LevelData:
    p: int
    k: int
    P: Poly        # over Q(zeta_p)
    Q_poly: Poly   # over Z

    def q_over_cyclo(self):
        K = self.P.dom
        return self.Q_poly.map_domain(K, K.of_int)


def level_polynomial_P(p, k=1):
    """prod_{j<p} (X - (zeta_p^j - 1)) over Q(zeta_p); equals X for k = 0.

    The roots are the p-torsion values of the coordinate on the multiplicative
    group at the level-p locus, so the product is independent of k >= 1.
    """
    if not is_prime(p) or p > 13:
        raise RingError("p = %d out of range for level polynomials" % p)
    if k < 0:
        raise RingError("k must be >= 0")
    K = CycloField(p)
    if k == 0:
        return LevelData(p=p, k=0, P=Poly.x(K), Q_poly=Poly.from_ints([0, 1], ZZ))
    P = Poly.one(K)
    zeta = K.zeta()
    for j in range(p):
        root = K.add(K.power(zeta, j), K.neg(K.one))
        P = P * Poly((K.neg(root), K.one), K)
    data = LevelData(p=p, k=k, P=P, Q_poly=p_series_mult(p))
    if not data.P.is_monic() or data.P.degree != p:
        raise RingError("level polynomial degree check failed")
    return data


def divides(P, Q):
    """Exact division test Q / P for monic P; (True, quotient) or (False, remainder)."""
    if not P.is_monic():
        raise RingError("divisor must be monic")
    quot, rem = Q.divmod(P)
    if rem.is_zero():
        return True, quot
    return False, rem


def is_separable(f):
    """gcd(f, f') = 1 over a field domain."""
    if not f.dom.is_field:
        raise RingError("separability needs a field domain")
    if f.degree < 1:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


def reduce_cyclo_mod_p(f, p):
    """Reduce a Q(zeta_p)-polynomial at the unique prime above p.

    The residue field is F_p with zeta_p mapping to 1, so a coefficient
    sum c_i zeta^i goes to sum c_i mod p (denominators must be prime to p).
    """
    dom = GF(p)

    def conv(elem):
        acc = Fraction(0)
        for c in elem:
            acc += c
        if acc.denominator % p == 0:
            raise RingError("coefficient not integral at %d" % p)
        return (acc.numerator * pow(acc.denominator, -1, p)) % p

    return f.map_domain(dom, conv)


# -- prime descriptors and Spec(Z[X]/(X^n-1)) ---------------------------------

@dataclass(frozen=True)
class PrimeDescriptor:
    """A canonical representative of a prime ideal in one of the supported rings."""

    ring: str    # "Z" | "Z_p" | "Z[zeta_d,1/d]" | "Z[X]/(X^n-1)" | "F_q[x,y]^h" | "Z/p[t]^h"
    kind: str    # "generic" | "closed" | "height-one"
    data: tuple  # canonical payload, JSON-serializable
    label: str


def residue_field_label(q, degree):
    """Label for the residue field with q^degree elements."""
    return "F_%d" % q if degree == 1 else "F_%d^%d" % (q, degree)


@dataclass(frozen=True)
class SpectrumRing:
    """Truncated Spec(Z[X]/(X^n-1)): minimal and maximal primes plus containments."""

    n: int
    prime_bound: int
    minimal: tuple    # PrimeDescriptor per divisor d | n, data ("cyclo", d)
    maximal: tuple    # PrimeDescriptor per (q, irreducible factor g of X^n-1 mod q)
    contains: tuple   # pairs (minimal index, maximal index)
    truncated: bool = True


def cyclic_spectrum_ring(n, prime_bound):
    """Primes of Z[X]/(X^n-1) up to a prime bound.

    Minimal primes are (Phi_d) for d | n; maximal primes are (q, g) for
    rational primes q <= bound and irreducible factors g of X^n - 1 mod q;
    (Phi_d) lies in (q, g) iff g divides Phi_d mod q.
    """
    if n < 1 or n > MAX_SPECTRUM_N:
        raise RingError("n = %d out of range" % n)
    if prime_bound > MAX_PRIME_BOUND:
        raise RingError("prime bound %d out of range" % prime_bound)
    ring = "Z[X]/(X^%d-1)" % n
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    minimal = []
    for d in divisors:
        label = "Q" if d <= 2 else "Q(zeta_%d)" % d
        minimal.append(PrimeDescriptor(ring=ring, kind="generic",
                                       data=("cyclo", d), label=label))
    maximal = []
    contains = []
    for q in primes_upto(prime_bound):
        dom = GF(q)
        xn1 = Poly.from_ints([-1] + [0] * (n - 1) + [1], ZZ).map_domain(dom, dom.of_int)
        factors = [g for g, _ in factor(xn1)]
        phi_mod = {
            d: cyclotomic_poly(d).map_domain(dom, dom.of_int) for d in divisors}
        for g in factors:
            j = len(maximal)
            maximal.append(PrimeDescriptor(
                ring=ring, kind="closed",
                data=("modular", q, tuple(g.coeffs)),
                label=residue_field_label(q, g.degree)))
            for i, d in enumerate(divisors):
                if (phi_mod[d] % g).is_zero():
                    contains.append((i, j))
    return SpectrumRing(n=n, prime_bound=prime_bound,
                        minimal=tuple(minimal), maximal=tuple(maximal),
                        contains=tuple(contains))
