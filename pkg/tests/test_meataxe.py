"""Module irreducibility testing, cross-checked by exhaustive spinning."""

import random

import pytest

from sl23.construct import build_generic, build_sl11, build_special
from sl23.ff import make_field
from sl23.matrix import Mat
from sl23.meataxe import ZeroSeed, is_irreducible_module, scan_lines, spin


def brute_force_reducible(gens):
    """Reducible iff some nonzero vector spins to a proper subspace."""
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


def test_spin_basics():
    f3 = make_field(3, 1)
    ident = Mat.identity(f3, 4)
    assert spin((1, 0, 0, 0), [ident]).dimension == 1
    cyc = Mat(f3, [[1 if j == (i + 1) % 4 else 0 for j in range(4)] for i in range(4)])
    assert spin((1, 0, 0, 0), [cyc]).dimension == 4
    sr = spin((0, 1, 0, 0), [cyc, ident])
    assert sr.dimension == 4
    assert len(sr.basis) == 4
    with pytest.raises(ZeroSeed):
        spin((0, 0, 0, 0), [cyc])


def test_scan_lines_identity_pair():
    f3 = make_field(3, 1)
    ident = Mat.identity(f3, 4)
    v = scan_lines(ident, ident)
    assert not v.irreducible
    assert v.side == "natural"
    assert v.basis is not None


def test_out_of_range_shapes_are_reducible():
    # raw instantiations outside the supported range expose an invariant
    # line, so the scanner must find a witness
    for n, q in [(9, 2), (9, 4), (10, 2), (10, 3), (10, 4)]:
        pair = build_generic(n, q, unchecked=True)
        v = scan_lines(pair.x, pair.y)
        assert not v.irreducible, (n, q)
        assert v.basis is not None


def test_in_range_pairs_are_irreducible():
    pairs = [
        build_generic(9, 3),
        build_generic(9, 5),
        build_generic(10, 5),
        build_special(9, 2),
        build_special(10, 3),
        build_sl11(2),
        build_sl11(3),
    ]
    for pair in pairs:
        v = scan_lines(pair.x, pair.y)
        assert v.irreducible, (pair.n, pair.q)
        m = is_irreducible_module([pair.x, pair.y], seed=0)
        assert m.irreducible, (pair.n, pair.q)


def test_block_diagonal_is_reducible():
    f3 = make_field(3, 1)
    a = Mat(f3, [[1, 1, 0, 0], [2, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]])
    b = Mat(f3, [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]])
    m = is_irreducible_module([a, b], seed=1)
    assert not m.irreducible
    assert m.basis is not None
    assert 1 <= len(m.basis) < 4


def test_small_natural_module_irreducible():
    f2 = make_field(2, 1)
    s = Mat(f2, [[0, 1], [1, 0]])
    t = Mat(f2, [[1, 1], [0, 1]])
    assert is_irreducible_module([s, t], seed=0).irreducible


def test_oracle_agreement():
    """200 random invertible pairs in dims 2-4 over GF(2)/GF(3); the fast
    verdict must match exhaustive spinning every time."""
    f2 = make_field(2, 1)
    f3 = make_field(3, 1)
    rng = random.Random(99)
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
        oracle = brute_force_reducible(gens)
        assert verdict.irreducible == (not oracle), (trial, q, n)
        if not verdict.irreducible:
            assert verdict.basis is not None
