"""Finite fields GF(p**k) with canonical integer-coded elements.

An element with coefficient vector (c_0, ..., c_{k-1}) over GF(p) is coded
as the integer sum(c_i * p**i); the integers 0 .. p-1 are therefore the
prime-subfield constants in every field of characteristic p.  A field's
defining polynomial is the lexicographically smallest monic irreducible of
its degree, comparing coefficient tuples low degree first, which makes the
whole construction reproducible: two runs (or two implementations) agree
on every field, every embedding and every canonical element of given
order.

Internally three arithmetic strategies are used.  Characteristic-2 fields
pack coefficients into int bitmasks (multiplication is carry-less), odd
extension fields use little-endian digit tuples, and any extension field
with at most _TABLE_MAX elements additionally precomputes full
multiplication and inversion tables since those fields carry all of the
matrix work.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

from .arith import factor, is_prime

_TABLE_MAX = 256


class NoEmbedding(ValueError):
    """Raised when no field embedding exists (wrong characteristic or degree)."""


class NotInSubfield(ValueError):
    """Raised by Embedding.project on an element outside the embedded image."""


class OrderDoesNotDivide(ValueError):
    """Raised when a requested element order does not divide p**k - 1."""


class InvalidPrime(ValueError):
    """Raised when a field characteristic is not prime."""


# ---------------------------------------------------------------------------
# GF(2)[t] on int bitmasks: bit i is the coefficient of t**i.

def _gf2_mul_raw(a: int, b: int) -> int:
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def _gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while True:
        sh = a.bit_length() - 1 - dm
        if sh < 0 or a == 0:
            return a
        a ^= m << sh


def _gf2_divmod(a: int, b: int) -> tuple[int, int]:
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        sh = a.bit_length() - 1 - db
        q ^= 1 << sh
        a ^= b << sh
    return q, a


def _gf2_inv(a: int, m: int) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of 0")
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1:
        q, r = _gf2_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _gf2_mul_raw(q, s1)
    if r0 != 1:
        raise ZeroDivisionError("element not invertible")
    return s0


# ---------------------------------------------------------------------------
# GF(p)[t] for odd p on little-endian digit tuples of fixed length k.

def _vec_mul(a: Sequence[int], b: Sequence[int], p: int, mod: Sequence[int], k: int) -> tuple[int, ...]:
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    # reduce the high part against the monic modulus
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i] % p
        if c:
            base = i - k
            for j in range(k):
                prod[base + j] -= c * mod[j]
        prod[i] = 0
    return tuple(c % p for c in prod[:k])


def _vec_poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    db = len(b) - 1
    inv_lead = pow(b[db], p - 2, p)
    q = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            f = c * inv_lead % p
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    while len(a) > 1 and a[-1] % p == 0:
        a.pop()
    return q, [c % p for c in a]


def _vec_inv(a: Sequence[int], p: int, mod: Sequence[int]) -> tuple[int, ...]:
    k = len(mod) - 1
    r0 = [c % p for c in mod]
    r1 = [c % p for c in a]
    while len(r1) > 1 and r1[-1] == 0:
        r1.pop()
    if r1 == [0]:
        raise ZeroDivisionError("inverse of 0")
    s0, s1 = [0], [1]
    while r1 != [0]:
        q, r = _vec_poly_divmod(r0, r1, p)
        # s0 - q*s1
        qs = [0] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    qs[i + j] += qi * sj
        ns = [0] * max(len(s0), len(qs))
        for i in range(len(ns)):
            v = (s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)
            ns[i] = v % p
        r0, r1, s0, s1 = r1, r, s1, ns
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible")
    lead_inv = pow(r0[0], p - 2, p)
    out = [c * lead_inv % p for c in s0]
    out += [0] * (k - len(out))
    return tuple(out[:k])


# ---------------------------------------------------------------------------

class Field:
    """GF(p**k) with elements coded as integers in [0, p**k).

    Do not call the constructor directly; make_field(p, k) returns the
    canonical field with the deterministic defining polynomial (and caches
    it, so object identity can be relied on within a process).
    """

    __slots__ = (
        "p", "k", "order", "modulus", "_modbits", "_mul_table", "_inv_table",
        "add", "sub", "neg", "mul", "inv", "dot",
    )

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus  # little-endian, length k+1, monic
        self._modbits = None
        self._mul_table = None
        self._inv_table = None
        if p == 2:
            self._modbits = sum(c << i for i, c in enumerate(modulus))
        self._bind_ops()

    # -- representation ----------------------------------------------------

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # -- element coding ----------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Little-endian coefficient vector of a over the prime field."""
        p = self.p
        out = []
        for _ in range(self.k):
            a, c = divmod(a, p)
            out.append(c)
        return tuple(out)

    def encode(self, cs: Iterable[int]) -> int:
        v = 0
        for i, c in enumerate(cs):
            v += (c % self.p) * self.p**i
        return v

    def element(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element code of {self!r}")
        return a

    def scalar(self, c: int) -> int:
        """The image of the integer c under Z -> GF(p) -> this field."""
        return c % self.p

    # -- arithmetic --------------------------------------------------------

    def _bind_ops(self):
        p, k = self.p, self.k
        if k == 1:
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: -a % p
            self.mul = lambda a, b: a * b % p
            self.inv = self._inv_prime
            self.dot = self._dot_prime
            return
        if p == 2:
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
            self.mul = self._mul_gf2
            self.inv = self._inv_gf2
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits
            self.neg = self._neg_digits
            self.mul = self._mul_digits
            self.inv = self._inv_digits
        if self.order <= _TABLE_MAX:
            n = self.order
            mul = self.mul
            table = [[mul(a, b) for b in range(n)] for a in range(n)]
            self._mul_table = table
            inv_t = [0] * n
            for a in range(1, n):
                row = table[a]
                for b in range(1, n):
                    if row[b] == 1:
                        inv_t[a] = b
                        break
            self._inv_table = inv_t
            self.mul = lambda a, b: table[a][b]
            self.inv = self._inv_table_lookup
        if p == 2:
            self.dot = self._dot_gf2
        else:
            self.dot = self._dot_generic

    def _inv_prime(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def _inv_table_lookup(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv_table[a]

    def _mul_gf2(self, a, b):
        return _gf2_mod(_gf2_mul_raw(a, b), self._modbits)

    def _inv_gf2(self, a):
        return _gf2_inv(a, self._modbits)

    def _add_digits(self, a, b):
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def _sub_digits(self, a, b):
        return self.encode(x - y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def _neg_digits(self, a):
        return self.encode(-x for x in self.coeffs(a))

    def _mul_digits(self, a, b):
        return self.encode(
            _vec_mul(self.coeffs(a), self.coeffs(b), self.p, self.modulus, self.k)
        )

    def _inv_digits(self, a):
        return self.encode(_vec_inv(self.coeffs(a), self.p, self.modulus))

    # dot products carry the inner loops of all matrix code
    def _dot_prime(self, xs, ys):
        return sum(x * y for x, y in zip(xs, ys)) % self.p

    def _dot_gf2(self, xs, ys):
        mul = self.mul
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc ^= mul(x, y)
        return acc

    def _dot_generic(self, xs, ys):
        add, mul = self.add, self.mul
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = add(acc, mul(x, y))
        return acc

    def pow(self, a: int, e: int) -> int:
        """a**e with e >= 0 (or e < 0 for invertible a)."""
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def elements(self):
        return range(self.order)

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)


# ---------------------------------------------------------------------------
# Deterministic defining polynomials.
#
# Candidates of degree k are scanned in lexicographic order of the tuple
# (c_0, c_1, ..., c_{k-1}) of non-leading coefficients, and the first
# irreducible one wins.  Irreducibility here is the Rabin condition checked
# directly on raw coefficient data (the generic polynomial layer is built
# on top of fields, not under them).

def _gf2_pow_mod(a: int, e: int, m: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _gf2_mod(_gf2_mul_raw(r, a), m)
        a = _gf2_mod(_gf2_mul_raw(a, a), m)
        e >>= 1
    return r


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_divmod(a, b)[1]
    return a


def _gf2_irreducible(f: int, k: int) -> bool:
    if f & 1 == 0:
        return False  # divisible by t
    u = 2  # the polynomial t
    checkpoints = {k // r for r, _ in factor(k)}
    for i in range(1, k + 1):
        u = _gf2_mod(_gf2_mul_raw(u, u), f)
        if i in checkpoints and i < k:
            if _gf2_gcd(u ^ 2, f) != 1:
                return False
    return u == 2


def _vec_pow_mod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    r = [1]
    while e:
        if e & 1:
            r = _vec_polymul_mod(r, a, m, p)
        a = _vec_polymul_mod(a, a, m, p)
        e >>= 1
    return r


def _vec_polymul_mod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    prod = [c % p for c in prod]
    _, r = _vec_poly_divmod(prod, m, p)
    return r


def _vec_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b != [0]:
        _, r = _vec_poly_divmod(a, b, p)
        a, b = b, r
    return a


def _gfp_irreducible(coeffs: list[int], p: int) -> bool:
    k = len(coeffs) - 1
    if coeffs[0] == 0:
        return False
    u = [0, 1]  # the polynomial t
    checkpoints = {k // r for r, _ in factor(k)}
    for i in range(1, k + 1):
        u = _vec_pow_mod(u, p, coeffs, p)
        if i in checkpoints and i < k:
            d = u + [0] * (2 - len(u))
            d[1] = (d[1] - 1) % p
            while len(d) > 1 and d[-1] == 0:
                d.pop()
            if len(_vec_gcd(coeffs[:], d, p)) > 1:
                return False
    return u == [0, 1]


def _defining_poly(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest (low-degree-first) monic irreducible.

    Candidates are ordered by the coefficient tuple (c_0, ..., c_{k-1});
    the whole c_0 = 0 block is divisible by t, so the scan starts at
    c_0 = 1.
    """
    if k == 1:
        return (0, 1)  # the polynomial t: GF(p) is GF(p)[t]/(t)
    if p == 2:
        for v in range(1 << (k - 1)):
            # v's bits fill c_1 .. c_{k-1} high position first, keeping
            # the low-degree-first lexicographic order
            f = (1 << k) | 1
            for i in range(1, k):
                if v >> (k - 1 - i) & 1:
                    f |= 1 << i
            if _gf2_irreducible(f, k):
                return tuple(f >> i & 1 for i in range(k + 1))
        raise RuntimeError("no irreducible polynomial found")  # unreachable
    counters = [1] + [0] * (k - 1)
    while True:
        coeffs = counters + [1]
        if _gfp_irreducible(coeffs, p):
            return tuple(coeffs)
        # odometer increment, last coefficient fastest
        i = k - 1
        while i >= 0:
            counters[i] += 1
            if counters[i] < p:
                break
            counters[i] = 0
            i -= 1
        if i < 0:
            raise RuntimeError("no irreducible polynomial found")  # unreachable


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int) -> Field:
    """The canonical GF(p**k).  Raises InvalidPrime / ValueError on bad input."""
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    return Field(p, k, _defining_poly(p, k))


# ---------------------------------------------------------------------------

class NotAnnihilated(ValueError):
    """Raised when an element's stated order bound fails to annihilate it."""


def multiplicative_order(field: Field, a: int, bound_factors: list[tuple[int, int]]) -> int:
    """Exact order of a in the multiplicative group, given a factored bound.

    bound_factors must be the factorization of some multiple N of the true
    order; NotAnnihilated is raised when a**N != 1.
    """
    n = 1
    for r, e in bound_factors:
        n *= r**e
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    if field.pow(a, n) != 1:
        raise NotAnnihilated(f"element is not annihilated by the stated bound {n}")
    order = n
    for r, _ in bound_factors:
        while order % r == 0 and field.pow(a, order // r) == 1:
            order //= r
    return order


def element_of_order(field: Field, q_ord: int, q_factors: list[tuple[int, int]]) -> int:
    """The canonical element of exact order q_ord in GF(p**k)*.

    Scans candidates g in ascending element code order, starting at the
    residue class of t (at 2 in a prime field), and returns the first
    omega = g ** ((p**k - 1) / q_ord) whose order survives every check
    omega ** (q_ord / r) != 1 for the primes r dividing q_ord.
    """
    n = field.order - 1
    if q_ord < 1 or n % q_ord != 0:
        raise OrderDoesNotDivide(f"{q_ord} does not divide {field!r} group order {n}")
    cofactor = n // q_ord
    prime_quotients = [q_ord // r for r, _ in q_factors]
    start = field.p if field.k > 1 else 2
    for g in range(start, field.order):
        w = field.pow(g, cofactor)
        if w == 1 and q_ord > 1:
            continue
        if all(field.pow(w, t) != 1 for t in prime_quotients):
            return w
    raise OrderDoesNotDivide(f"no element of order {q_ord} found")  # unreachable


class Embedding:
    """Subfield embedding GF(p**k) -> GF(p**K) with k | K.

    The generator image is the smallest root (in element code order) of the
    small field's defining polynomial inside the big field; both directions
    are then tabulated, so project doubles as a subfield membership test.
    """

    __slots__ = ("small", "big", "image_of_generator", "_fwd", "_bwd")

    def __init__(self, small: Field, big: Field):
        self.small = small
        self.big = big
        self.image_of_generator = self._find_image()
        self._fwd = {}
        for s in range(small.order):
            v = 0
            for c in reversed(small.coeffs(s)):
                v = big.add(big.mul(v, self.image_of_generator), c)
            self._fwd[s] = v
        if len(set(self._fwd.values())) != small.order:
            raise RuntimeError("embedding is not injective")  # unreachable
        self._bwd = {v: s for s, v in self._fwd.items()}

    def _find_image(self) -> int:
        small, big = self.small, self.big
        if small.k == 1:
            return 0  # root of the degree-1 convention polynomial t
        sub_ord = small.order - 1
        w = element_of_order(big, sub_ord, factor(sub_ord))
        candidates = [0] + [big.pow(w, i) for i in range(sub_ord)]
        roots = []
        for c in candidates:
            acc = 0
            for m in reversed(small.modulus):
                acc = big.add(big.mul(acc, c), m)
            if acc == 0:
                roots.append(c)
        if not roots:
            raise RuntimeError("defining polynomial has no root in big field")
        return min(roots)

    def lift(self, a: int) -> int:
        """Image in the big field of a small-field element."""
        return self._fwd[a]

    def project(self, b: int) -> int:
        """Preimage of b, or NotInSubfield if b is outside the image."""
        try:
            return self._bwd[b]
        except KeyError:
            raise NotInSubfield(
                f"element {b} of {self.big!r} is not in the embedded {self.small!r}"
            ) from None


def embed(small: Field, big: Field) -> Embedding:
    """Canonical embedding, or NoEmbedding if none exists."""
    if small.p != big.p:
        raise NoEmbedding(
            f"characteristic mismatch: {small!r} vs {big!r}"
        )
    if big.k % small.k != 0:
        raise NoEmbedding(
            f"{small!r} does not embed in {big!r}: {small.k} does not divide {big.k}"
        )
    return Embedding(small, big)
