"""Exact integer arithmetic: primality, factoring, primitive prime divisors.

Everything here is deterministic.  Primality uses Miller-Rabin with a fixed
witness set that is known to be exact below 3.3 * 10**24; factoring uses
trial division by a sieved prime table followed by Brent's variant of the
Pollard rho method with a fixed parameter schedule, so repeated runs always
walk the same path.  Factorizations are returned as ascending
(prime, exponent) lists.
"""

from __future__ import annotations

import math
import random


class NotPrimePower(ValueError):
    """Raised when an integer is not of the form p**m with p prime, m >= 1."""


# Exact witness sets for deterministic Miller-Rabin, from the published
# bounds (Pomerance et al., Jaeschke, Sorenson & Webster).  Each entry
# (limit, bases) certifies all n < limit.
_MR_RANGES = [
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318665857834031151167461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (3317044064679887385961981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)

# Pseudo-random witness count for inputs beyond the exact table.  The bases
# are drawn from a generator with a fixed seed so results are reproducible.
_MR_EXTRA_ROUNDS = 40


def _mr_witness(a: int, d: int, r: int, n: int) -> bool:
    """True if a witnesses the compositeness of n = d * 2**r + 1."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test for nonnegative integers.

    Below 3.3 * 10**24 the fixed Miller-Rabin witness sets are exact; above
    that, 40 extra rounds with reproducibly seeded bases are used (error
    probability below 4**-40, and nothing in this package ever gets there).
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for limit, bases in _MR_RANGES:
        if n < limit:
            return not any(_mr_witness(a % n, d, r, n) for a in bases)
    rng = random.Random(0xC0FFEE)
    bases = _MR_RANGES[-1][1] + tuple(
        rng.randrange(2, n - 1) for _ in range(_MR_EXTRA_ROUNDS)
    )
    return not any(_mr_witness(a % n, d, r, n) for a in bases)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit) if flags[i]]


_TRIAL_LIMIT = 10000
_trial_primes: list[int] | None = None


def _trial_prime_table() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = _sieve(_TRIAL_LIMIT)
    return _trial_primes


def _brent_rho(n: int) -> int:
    """One nontrivial factor of an odd composite n, via Brent's cycle method.

    The constants (y0 = 2, c = 1, 2, 3, ...) are fixed, so the factor found
    for a given n never varies between runs.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 10000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # backtrack one step at a time
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g
    raise RuntimeError(f"rho parameter schedule exhausted for {n}")


def factor(n: int) -> list[tuple[int, int]]:
    """Full factorization of n >= 1 as an ascending [(prime, exponent)] list.

    factor(1) == [].  Raises ValueError for n < 1.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in _trial_prime_table():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _brent_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(out.items())


def factor_value(factors: list[tuple[int, int]]) -> int:
    """Rebuild the integer from an [(prime, exponent)] list."""
    n = 1
    for p, e in factors:
        n *= p**e
    return n


def multiplicative_order_mod(a: int, r: int) -> int:
    """Order of a in (Z/rZ)* for gcd(a, r) = 1, r >= 2."""
    if math.gcd(a, r) != 1:
        raise ValueError(f"{a} is not a unit modulo {r}")
    order = r - 1 if is_prime(r) else _totient(r)
    for p, _ in factor(order):
        while order % p == 0 and pow(a, order // p, r) == 1:
            order //= p
    return order


def _totient(r: int) -> int:
    t = r
    for p, _ in factor(r):
        t -= t // p
    return t


def zsigmondy_primes(a: int, k: int) -> list[int]:
    """Primes r dividing a**k - 1 but no a**i - 1 with 0 < i < k, ascending.

    Equivalently: prime divisors r of a**k - 1 such that a has order
    exactly k modulo r.  The list is empty precisely at the classical
    exceptions, e.g. zsigmondy_primes(2, 6) == [].
    """
    if a < 2 or k < 1:
        raise ValueError(f"need a >= 2 and k >= 1, got a={a}, k={k}")
    out = []
    for r, _ in factor(a**k - 1):
        # a**k == 1 mod r already holds, so ord divides k; it equals k
        # as soon as no maximal proper divisor of k kills it.
        if all(pow(a, k // s, r) != 1 for s, _ in factor(k)):
            out.append(r)
    return out


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Write q = p**m with p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    for p in _trial_prime_table():
        if p * p > q:
            break
        if q % p == 0:
            m = 0
            n = q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1:
                raise NotPrimePower(f"{q} is not a prime power")
            return p, m
    if is_prime(q):
        return q, 1
    # composite with no small prime factor: check for a perfect prime power
    for m in range(2, q.bit_length() + 1):
        p = round(q ** (1.0 / m))
        for cand in (p - 1, p, p + 1):
            if cand >= 2 and cand**m == q and is_prime(cand):
                return cand, m
    raise NotPrimePower(f"{q} is not a prime power")
