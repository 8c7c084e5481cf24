"""Irreducibility testing for the module generated by a set of matrices.

Two independent checks are provided:

* scan_lines enumerates every possible common eigenvector of an order-2 /
  order-3 generator pair (eigenvalue pairs are limited to cube and square
  roots of unity) and repeats the scan on the transposed pair, which
  detects invariant hyperplanes as invariant lines of the dual module.
* is_irreducible_module is the classical randomized algebra test: find an
  algebra element with an irreducible characteristic factor g whose kernel
  has dimension exactly deg g; spinning one kernel vector and one dual
  kernel vector then decides irreducibility outright.

Both emit Verdicts whose reducibility witnesses are re-verified invariant
subspaces, never raw guesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .matrix import Mat, RowSpace, factor_degree_components, kernel
from .poly import Poly


class ZeroSeed(ValueError):
    """Raised when asked to spin up the zero vector."""


class InconclusiveAfterRetries(RuntimeError):
    """The randomized test exhausted its budget without a usable algebra
    element.  Statistically negligible for honest inputs; report, never
    guess."""


@dataclass(frozen=True)
class SpinResult:
    """Smallest subspace containing the seed and closed under the action."""

    basis: tuple[tuple[int, ...], ...]
    dimension: int


@dataclass(frozen=True)
class Verdict:
    """Outcome of an irreducibility check.

    For a reducible verdict, side says whether the invariant subspace
    lives in the natural module ("natural") or is an invariant subspace
    of the transposed action ("dual", i.e. an invariant hyperplane
    annihilator), and basis spans it.
    """

    irreducible: bool
    side: Optional[str] = None
    basis: Optional[tuple[tuple[int, ...], ...]] = None


def _check_gens(gens: Sequence[Mat]) -> tuple[int, "Field"]:
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    field = gens[0].field
    if any(g.n != n or g.field != field for g in gens):
        raise ValueError("generators disagree in size or field")
    return n, field


def spin(seed: Sequence[int], gens: Sequence[Mat]) -> SpinResult:
    """Close the span of seed under all generators, breadth-first.

    Generators are applied in their listed order to each new basis vector,
    so the resulting basis sequence is deterministic.
    """
    n, field = _check_gens(gens)
    vec = tuple(seed)
    if len(vec) != n:
        raise ValueError("seed length does not match the generators")
    if all(c == 0 for c in vec):
        raise ZeroSeed("cannot spin the zero vector")
    space = RowSpace(field, n)
    space.add(vec)
    basis = [vec]
    queue = [vec]
    while queue and space.dim < n:
        v = queue.pop(0)
        for g in gens:
            u = g.apply(v)
            if space.add(u):
                basis.append(u)
                queue.append(u)
    return SpinResult(basis=tuple(basis), dimension=space.dim)


def _assert_invariant(basis: Sequence[Sequence[int]], gens: Sequence[Mat]) -> None:
    n, field = _check_gens(gens)
    space = RowSpace(field, n)
    for v in basis:
        space.add(v)
    for v in basis:
        for g in gens:
            assert space.contains(g.apply(v)), "witness subspace is not invariant"


def scan_lines(x: Mat, y: Mat) -> Verdict:
    """Search for a common eigenvector of the pair, then of the transposes.

    Any one-dimensional invariant subspace is spanned by a w with
    y w = lambda w, x w = nu w where lambda cubes and nu squares to 1;
    all such (lambda, nu) are enumerated and each eigenspace intersection
    is computed exactly.  A hit on the transposed side certifies an
    invariant hyperplane of the natural module.
    """
    n, field = _check_gens([x, y])
    lambdas = [c for c in range(1, field.order) if field.pow(c, 3) == 1]
    nus = [c for c in range(1, field.order) if field.pow(c, 2) == 1]
    for side, (xx, yy) in (("natural", (x, y)), ("dual", (x.T, y.T))):
        for lam in lambdas:
            for nu in nus:
                stacked = [
                    tuple(
                        field.sub(row[j], lam if i == j else 0)
                        for j, _ in enumerate(row)
                    )
                    for i, row in enumerate(yy.rows)
                ] + [
                    tuple(
                        field.sub(row[j], nu if i == j else 0)
                        for j, _ in enumerate(row)
                    )
                    for i, row in enumerate(xx.rows)
                ]
                null = kernel(field, stacked)
                if null:
                    _assert_invariant([null[0]], [xx, yy])
                    return Verdict(irreducible=False, side=side, basis=(null[0],))
    return Verdict(irreducible=True)


# ---------------------------------------------------------------------------
# Randomized algebra test.

_BUDGET = 64


def _random_poly(field, degree_below: int, rng: random.Random) -> Poly:
    while True:
        coeffs = [rng.randrange(field.order) for _ in range(degree_below)]
        f = Poly(field, coeffs)
        if f.degree >= 1:
            return f


def _split_equal_degree(g: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a squarefree product of distinct degree-d irreducibles."""
    if g.degree == d:
        return [g]
    field = g.field
    while True:
        u = _random_poly(field, g.degree, rng)
        c = g.gcd(u)
        if not 0 < c.degree < g.degree:
            if field.p == 2:
                # trace map over GF(2): constant on each irreducible component
                acc = u % g
                t = acc
                for _ in range(field.k * d - 1):
                    t = t.pow_mod(2, g)
                    acc = (acc + t) % g
                c = g.gcd(acc)
            else:
                h = u.pow_mod((field.order**d - 1) // 2, g)
                c = g.gcd(h - Poly.constant(field, 1))
        if 0 < c.degree < g.degree:
            break
    left = c.monic()
    right = (g // left).monic()
    return _split_equal_degree(left, d, rng) + _split_equal_degree(right, d, rng)


def _poly_at_matrix(g: Poly, a: Mat) -> Mat:
    field = a.field
    acc = Mat.zero(field, a.n)
    for c in reversed(g.coeffs):
        acc = acc * a
        if c:
            acc = acc + Mat.identity(field, a.n).scale(c)
    return acc


def _random_algebra_element(gens: Sequence[Mat], rng: random.Random) -> Mat:
    def word() -> Mat:
        m = gens[rng.randrange(len(gens))]
        for _ in range(rng.randrange(1, 4)):
            m = m * gens[rng.randrange(len(gens))]
        return m

    a = word() + word()
    if rng.randrange(2):
        a = a + word()
    return a


def is_irreducible_module(gens: Sequence[Mat], seed: int = 0) -> Verdict:
    """Decide irreducibility of the module the generators act on.

    Draws up to 64 random elements of the matrix algebra from a generator
    seeded with `seed`.  For an element whose characteristic polynomial
    has an irreducible factor g with nullity(g(A)) equal to deg g, one
    spin of a kernel vector and one spin of a transposed-kernel vector
    give a complete answer: if both fill the space the module is
    irreducible, and any shortfall hands back a verified invariant
    subspace (natural or dual).
    """
    n, field = _check_gens(gens)
    if n == 1:
        return Verdict(irreducible=True)
    rng = random.Random(seed)
    gens_t = [g.T for g in gens]
    for _ in range(_BUDGET):
        a = _random_algebra_element(gens, rng)
        cp = a.charpoly()
        for d, component in factor_degree_components(cp):
            if component.degree == d:
                candidates = [component]
            else:
                candidates = _split_equal_degree(component, d, rng)
            for g in candidates:
                ga = _poly_at_matrix(g, a)
                null = kernel(field, ga.rows)
                if len(null) != d:
                    continue
                sp = spin(null[0], gens)
                if sp.dimension < n:
                    _assert_invariant(sp.basis, gens)
                    return Verdict(irreducible=False, side="natural", basis=sp.basis)
                null_t = kernel(field, ga.T.rows)
                spd = spin(null_t[0], gens_t)
                if spd.dimension < n:
                    _assert_invariant(spd.basis, gens_t)
                    return Verdict(irreducible=False, side="dual", basis=spd.basis)
                return Verdict(irreducible=True)
    raise InconclusiveAfterRetries(
        f"no usable algebra element after {_BUDGET} attempts"
    )
