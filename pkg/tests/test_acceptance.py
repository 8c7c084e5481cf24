"""Acceptance gate: seven criteria, one test (and one pass/fail line) each.

Run with -v for the per-criterion verdict lines, or -s to also see the
timing summaries. Caches are cleared before timed sections so the limits
measure real construction work.
"""

import copy
import math
import random
import time

from sl23 import construct
from sl23.arith import factor, is_prime, zsigmondy_primes
from sl23.certify import certify, dumps, q_divisibility_scan, verify
from sl23.construct import (
    build,
    build_generic,
    build_sl11,
    build_special,
    charpoly_from_deltas,
)
from sl23.ff import make_field
from sl23.matrix import Mat, RowSpace, eval_word
from sl23.meataxe import is_irreducible_module, scan_lines, spin
from sl23.poly import Poly, is_irreducible

SPECIAL = [(9, 2), (9, 4), (10, 2), (10, 3), (10, 4)]
GENERIC = [(9, q) for q in (3, 5, 7, 8, 9, 11, 13, 16)] + [
    (10, q) for q in (5, 7, 8, 9, 11, 13, 16)
]
SL11_Q = [2, 3, 4, 5, 7, 8, 9]
ALL_PAIRS = SPECIAL + GENERIC + [(11, q) for q in SL11_Q]


def clear_caches():
    construct.build.cache_clear()
    construct.build_generic.cache_clear()
    construct.build_special.cache_clear()
    construct.build_sl11.cache_clear()


def test_criterion_1_order_witnesses():
    golden = {
        (9, 2): (73, 381),
        (9, 4): (81915, 29127),
        (10, 2): (1023, 73),
        (10, 3): (7381, 19682),
        (10, 4): (4161, 69905),
    }
    clear_caches()
    worst = 0.0
    for (n, q), (oz, word_order) in golden.items():
        t0 = time.perf_counter()
        pair = build_special(n, q)
        assert pair.z.order() == oz, (n, q)
        wit = pair.words[1]
        assert wit.claimed_order == word_order, (n, q)
        assert eval_word(wit.letters, pair.x, pair.y).order() == word_order, (n, q)
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, (n, q, elapsed)
        worst = max(worst, elapsed)
    print(f"criterion 1 PASS: five order witnesses exact, worst case {worst:.3f}s")


def test_criterion_2_generic_construction():
    clear_caches()
    t0 = time.perf_counter()
    for n, q in GENERIC:
        pair = build_generic(n, q)
        assert (pair.x * pair.x).is_identity and not pair.x.is_identity
        y2 = pair.y * pair.y
        assert (y2 * pair.y).is_identity and not pair.y.is_identity
        assert pair.x.det() == 1 and pair.y.det() == 1
        want_q = q ** (n - 1) - 1
        if q in (3, 7):
            want_q //= 2
        assert pair.Q == want_q, (n, q)
        assert pair.z.order() == want_q, (n, q)
        assert is_irreducible(pair.f), (n, q)
        fld = pair.field
        r = fld.inv(pair.alphas[-1])
        expected = Poly.x_minus(fld, r) * pair.f
        assert pair.z.charpoly().coeffs == expected.coeffs, (n, q)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, elapsed
    print(f"criterion 2 PASS: {len(GENERIC)} generic pairs in {elapsed:.2f}s")


def test_criterion_3_dimension_11():
    clear_caches()
    t0 = time.perf_counter()
    for q in SL11_Q:
        pair = build_sl11(q)
        cp = pair.z.charpoly()
        assert cp == pair.l, q
        assert cp == charpoly_from_deltas(pair.field, pair.deltas), q
        assert pair.Q == (q**11 - 1) // (q - 1), q
        assert pair.z.order() == pair.Q, q
        assert math.gcd(6, pair.Q) == 1, q
        rows = q_divisibility_scan(q)
        hot = [r.entry.case for r in rows if any(r.divisible)]
        assert hot == [7], (q, hot)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, elapsed
    print(f"criterion 3 PASS: {len(SL11_Q)} dimension-11 pairs in {elapsed:.2f}s")


def test_criterion_4_module_irreducibility():
    for n, q in ALL_PAIRS:
        pair = build(n, q)
        v = scan_lines(pair.x, pair.y)
        assert v.irreducible, (n, q)
        m = is_irreducible_module([pair.x, pair.y], seed=0)
        assert m.irreducible, (n, q)
    for n, q in SPECIAL:
        raw = build_generic(n, q, unchecked=True)
        v = scan_lines(raw.x, raw.y)
        assert not v.irreducible, (n, q)
        assert v.basis is not None, (n, q)
        # the witness really is invariant under both generators
        gens = (raw.x, raw.y) if v.side == "natural" else (raw.x.T, raw.y.T)
        space = RowSpace(raw.field, raw.n)
        for vec in v.basis:
            space.add(vec)
        for vec in v.basis:
            for g in gens:
                assert space.contains(g.apply(vec)), (n, q)
    print(
        f"criterion 4 PASS: {len(ALL_PAIRS)} pairs irreducible, "
        f"{len(SPECIAL)} out-of-range shapes expose invariant subspaces"
    )


def test_criterion_5_oracle_equivalence():
    def brute_force_reducible(gens):
        n = gens[0].n
        q = gens[0].field.order
        for code in range(1, q**n):
            vec = []
            c = code
            for _ in range(n):
                c, r = divmod(c, q)
                vec.append(r)
            if spin(tuple(vec), gens).dimension < n:
                return True
        return False

    f2 = make_field(2, 1)
    f3 = make_field(3, 1)
    rng = random.Random(99)
    disagreements = 0
    for trial in range(200):
        q, field = rng.choice([(2, f2), (3, f3)])
        n = rng.randrange(2, 5)
        gens = []
        for _ in range(2):
            while True:
                cand = Mat(
                    field, [[rng.randrange(q) for _ in range(n)] for _ in range(n)]
                )
                if cand.det() != 0:
                    gens.append(cand)
                    break
        verdict = is_irreducible_module(gens, seed=trial)
        if verdict.irreducible == brute_force_reducible(gens):
            disagreements += 1
    assert disagreements == 0
    print("criterion 5 PASS: 200 random pairs, verdicts match exhaustive spinning")


def test_criterion_6_certificate_round_trip():
    first = {}
    for n, q in ALL_PAIRS:
        cert = certify(n, q)
        r = verify(cert)
        assert r.ok, (n, q, r.failed_claim)
        first[(n, q)] = dumps(cert)
    # tampering with a single entry must flip the verdict
    cert = certify(9, 3)
    bad = copy.deepcopy(cert)
    bad["matrices"]["y"][4][4] = (
        "1" if bad["matrices"]["y"][4][4] != "1" else "2"
    )
    assert not verify(bad).ok
    bad = copy.deepcopy(certify(11, 3))
    bad["orders"]["z"] = "9"
    assert not verify(bad).ok
    # byte-identical across a full rebuild with the same seed
    clear_caches()
    for n, q in ALL_PAIRS:
        assert dumps(certify(n, q)) == first[(n, q)], (n, q)
    print(
        f"criterion 6 PASS: {len(ALL_PAIRS)} certificates verify, "
        "tampering detected, output byte-stable"
    )


def test_criterion_7_arithmetic_substrate():
    limit = 10**6
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    rng = random.Random(7)
    for _ in range(20000):
        v = rng.randrange(2, limit)
        assert is_prime(v) == bool(flags[v]), v
    for _ in range(1500):
        v = rng.randrange(2, limit)
        fs = factor(v)
        prod = 1
        for r, e in fs:
            assert flags[r], (v, r)
            prod *= r**e
        assert prod == v
        assert fs == sorted(fs)
    assert zsigmondy_primes(2, 11) == [23, 89]
    for p, k in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2)]:
        field = make_field(p, k)
        frng = random.Random(p * 31 + k)
        for _ in range(1000):
            a = frng.randrange(field.order)
            b = frng.randrange(field.order)
            c = frng.randrange(field.order)
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
            assert field.mul(a, field.add(b, c)) == field.add(
                field.mul(a, b), field.mul(a, c)
            )
            if a:
                assert field.mul(a, field.inv(a)) == 1
            assert field.frobenius(a) == field.pow(a, p)
            assert field.frobenius(field.add(a, b)) == field.add(
                field.frobenius(a), field.frobenius(b)
            )
    print("criterion 7 PASS: primality, factoring, field and Frobenius suites")
