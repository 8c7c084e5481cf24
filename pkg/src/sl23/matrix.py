"""Exact dense matrices over a Field, plus the linear algebra the package
needs: determinants, characteristic polynomials (Hessenberg reduction, no
fractions ever leave the field), exact element orders in GL_n, kernels,
incremental row spaces for spinning, and evaluation of words in two
generators.

Matrices are immutable: rows is a tuple of row tuples of element codes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .arith import factor
from .ff import Field
from .poly import Poly


class WrongShape(ValueError):
    """Raised on malformed or incompatible matrix shapes."""


class Singular(ValueError):
    """Raised when an invertibility-requiring operation meets a singular matrix."""


class Mat:
    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(r) for r in rows)
        n = len(rs)
        if n == 0 or any(len(r) != n for r in rs):
            raise WrongShape("need a nonempty square matrix")
        self.field = field
        self.n = n
        self.rows = rs

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, ((1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Mat":
        return cls(field, ((0,) * n,) * n)

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "\n".join(" ".join(str(c) for c in row) for row in self.rows)
        return f"Mat over {self.field!r}:\n{body}"

    @property
    def is_identity(self) -> bool:
        return all(
            c == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, c in enumerate(row)
        )

    def __mul__(self, other: "Mat") -> "Mat":
        if self.n != other.n or self.field != other.field:
            raise WrongShape("matrix product shape/field mismatch")
        dot = self.field.dot
        cols = tuple(zip(*other.rows))
        return Mat(self.field, ((dot(row, col) for col in cols) for row in self.rows))

    def __add__(self, other: "Mat") -> "Mat":
        if self.n != other.n or self.field != other.field:
            raise WrongShape("matrix sum shape/field mismatch")
        add = self.field.add
        return Mat(
            self.field,
            (map(add, ra, rb) for ra, rb in zip(self.rows, other.rows)),
        )

    def scale(self, c: int) -> "Mat":
        mul = self.field.mul
        return Mat(self.field, ((mul(c, a) for a in row) for row in self.rows))

    def __pow__(self, e: int) -> "Mat":
        if e < 0:
            raise ValueError("negative matrix powers are not supported")
        result = Mat.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def T(self) -> "Mat":
        return Mat(self.field, zip(*self.rows))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.n:
            raise WrongShape("vector length mismatch")
        dot = self.field.dot
        return tuple(dot(row, vec) for row in self.rows)

    def det(self) -> int:
        """Determinant by Gaussian elimination with first-nonzero pivoting."""
        f = self.field
        a = [list(r) for r in self.rows]
        n = self.n
        sign_flips = 0
        d = 1
        for j in range(n):
            piv = next((i for i in range(j, n) if a[i][j] != 0), None)
            if piv is None:
                return 0
            if piv != j:
                a[j], a[piv] = a[piv], a[j]
                sign_flips ^= 1
            pivval = a[j][j]
            d = f.mul(d, pivval)
            inv_p = f.inv(pivval)
            for i in range(j + 1, n):
                c = a[i][j]
                if c:
                    fct = f.mul(c, inv_p)
                    a[i] = [f.sub(x, f.mul(fct, y)) for x, y in zip(a[i], a[j])]
        return f.neg(d) if sign_flips else d

    def charpoly(self) -> Poly:
        """det(t*I - A), computed exactly via Hessenberg reduction."""
        f = self.field
        n = self.n
        h = [list(r) for r in self.rows]
        # similarity-reduce to upper Hessenberg form
        for j in range(n - 2):
            piv = next((i for i in range(j + 1, n) if h[i][j] != 0), None)
            if piv is None:
                continue
            if piv != j + 1:
                h[j + 1], h[piv] = h[piv], h[j + 1]
                for row in h:
                    row[j + 1], row[piv] = row[piv], row[j + 1]
            inv_p = f.inv(h[j + 1][j])
            for i in range(j + 2, n):
                c = h[i][j]
                if c:
                    fct = f.mul(c, inv_p)
                    h[i] = [f.sub(x, f.mul(fct, y)) for x, y in zip(h[i], h[j + 1])]
                    # compensating column operation keeps the conjugacy class
                    for row in h:
                        row[j + 1] = f.add(row[j + 1], f.mul(fct, row[i]))
        # charpolys of the leading minors by the last-column expansion
        polys = [Poly.constant(f, 1)]
        for i in range(1, n + 1):
            acc = Poly.x_minus(f, h[i - 1][i - 1]) * polys[i - 1]
            below = 1  # running product of subdiagonal entries
            for m in range(1, i):
                below = f.mul(below, h[i - m][i - m - 1])
                coef = f.mul(h[i - m - 1][i - 1], below)
                acc = acc - polys[i - m - 1].scale(coef)
            polys.append(acc)
        return polys[n]

    def order(self) -> int:
        """Exact multiplicative order; Singular if not invertible.

        The order bound comes from the degrees of the irreducible factors
        of the characteristic polynomial: it divides
        p**ceil(log_p n) * lcm(q**d - 1 for each factor degree d).
        """
        f = self.field
        cp = self.charpoly()
        if cp.evaluate(0) == 0:
            raise Singular("zero determinant, no multiplicative order")
        degrees = {d for d, _ in factor_degree_components(cp)}
        bound_factors: dict[int, int] = {}
        for d in degrees:
            for r, e in factor(f.order**d - 1):
                bound_factors[r] = max(bound_factors.get(r, 0), e)
        nilp = 1
        while f.p**nilp < self.n:
            nilp += 1
        bound_factors[f.p] = max(bound_factors.get(f.p, 0), nilp)
        bound = 1
        for r, e in bound_factors.items():
            bound *= r**e
        if not (self**bound).is_identity:
            raise ArithmeticError("order bound failed to annihilate")  # unreachable
        order = bound
        for r in bound_factors:
            while order % r == 0 and (self ** (order // r)).is_identity:
                order //= r
        return order


def factor_degree_components(cp: Poly) -> list[tuple[int, Poly]]:
    """Distinct-degree decomposition of a nonzero polynomial.

    Returns [(d, g_d)] ascending in d, where g_d is the (squarefree)
    product of the distinct irreducible factors of degree d.  Multiplicity
    is stripped along the way, so the input need not be squarefree.
    """
    field = cp.field
    g = cp.monic()
    x = Poly.x(field)
    out = []
    u = x % g
    d = 0
    while g.degree > 0:
        d += 1
        if 2 * d > g.degree:
            out.append((g.degree, g))
            break
        u = u.pow_mod(field.order, g)
        h = g.gcd(u - x)
        if h.degree > 0:
            out.append((d, h))
            while True:
                w = g.gcd(h)
                if w.degree == 0:
                    break
                g = g // w
            u = u % g
    return out


class RowSpace:
    """Incremental echelonized row space over a field.

    add() reduces a vector against the current basis and absorbs any
    nonzero residue; contains() is a membership test.  Pivots are the
    first nonzero positions after reduction.
    """

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.pivots: list[int] = []
        self.echelon: list[tuple[int, ...]] = []

    @property
    def dim(self) -> int:
        return len(self.echelon)

    def _reduce(self, vec: Sequence[int]) -> list[int]:
        f = self.field
        v = list(vec)
        for row, piv in zip(self.echelon, self.pivots):
            c = v[piv]
            if c:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def add(self, vec: Sequence[int]) -> bool:
        """True if vec enlarged the space."""
        v = self._reduce(vec)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = self.field.inv(v[piv])
        self.echelon.append(tuple(self.field.mul(inv, c) for c in v))
        self.pivots.append(piv)
        return True

    def contains(self, vec: Sequence[int]) -> bool:
        return all(c == 0 for c in self._reduce(vec))


def kernel(field: Field, rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of the right kernel {v : M v = 0} of an m x n matrix.

    Basis vectors are in the canonical order given by ascending free
    column index, each with a 1 in its free position.
    """
    if not rows:
        raise WrongShape("kernel of an empty matrix")
    n = len(rows[0])
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise WrongShape("ragged matrix")
    m = len(a)
    pivots: list[tuple[int, int]] = []  # (row, col)
    prow = 0
    for col in range(n):
        piv = next((i for i in range(prow, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        inv = field.inv(a[prow][col])
        a[prow] = [field.mul(inv, c) for c in a[prow]]
        for i in range(m):
            if i != prow and a[i][col]:
                c = a[i][col]
                a[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(a[i], a[prow])]
        pivots.append((prow, col))
        prow += 1
        if prow == m:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = [0] * n
        v[free] = 1
        for prow_, pcol in pivots:
            v[pcol] = field.neg(a[prow_][free])
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# Words in two generators x, y of orders 2 and 3.  A word is a sequence of
# letters "x", "y", "yy"; normalization forbids consecutive letters from
# the same generator (they would collapse).

WORD_LETTERS = ("x", "y", "yy")


def check_word(word: Sequence[str]) -> tuple[str, ...]:
    w = tuple(word)
    if not w:
        raise ValueError("empty generator word")
    for letter in w:
        if letter not in WORD_LETTERS:
            raise ValueError(f"unknown word letter {letter!r}")
    for a, b in zip(w, w[1:]):
        if (a == "x") == (b == "x"):
            raise ValueError(f"word is not normalized at {a!r} {b!r}")
    return w


def eval_word(word: Sequence[str], x: Mat, y: Mat) -> Mat:
    """Left-to-right product of the word letters evaluated at x, y."""
    w = check_word(word)
    yy = y * y
    lookup = {"x": x, "y": y, "yy": yy}
    acc = lookup[w[0]]
    for letter in w[1:]:
        acc = acc * lookup[letter]
    return acc
