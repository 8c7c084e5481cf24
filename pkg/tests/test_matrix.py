"""Matrices over finite fields, checked against slow textbook oracles."""

import random

import pytest

from sl23.ff import make_field
from sl23.matrix import (
    Mat,
    RowSpace,
    Singular,
    WrongShape,
    check_word,
    eval_word,
    factor_degree_components,
    kernel,
)
from sl23.poly import Poly


def charpoly_cofactor(m):
    """det(tI - A) via polynomial-entry cofactor expansion. Slow oracle."""
    f = m.field
    n = m.n
    entries = [
        [
            (Poly.x(f) - Poly.constant(f, m.rows[i][j]))
            if i == j
            else Poly.constant(f, f.neg(m.rows[i][j]))
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        acc = Poly.constant(f, 0)
        r0 = rows[0]
        for idx, c in enumerate(cols):
            term = entries[r0][c] * det(rows[1:], cols[:idx] + cols[idx + 1 :])
            acc = acc - term if idx % 2 else acc + term
        return acc

    return det(tuple(range(n)), tuple(range(n)))


def test_charpoly_matches_cofactor_oracle():
    rng = random.Random(7)
    for trial in range(60):
        p, k = rng.choice([(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (7, 1)])
        f = make_field(p, k)
        n = rng.randrange(1, 6)
        m = Mat(f, [[rng.randrange(f.order) for _ in range(n)] for _ in range(n)])
        cp = m.charpoly()
        oracle = charpoly_cofactor(m)
        assert cp == oracle, (trial, p, k, n)
        # det = (-1)^n * cp(0)
        d0 = cp.evaluate(0)
        want = d0 if n % 2 == 0 else f.neg(d0)
        assert m.det() == want, trial


def test_det_multiplicative():
    f = make_field(3, 1)
    rng = random.Random(71)
    for _ in range(100):
        n = rng.randrange(1, 5)
        a = Mat(f, [[rng.randrange(3) for _ in range(n)] for _ in range(n)])
        b = Mat(f, [[rng.randrange(3) for _ in range(n)] for _ in range(n)])
        assert (a * b).det() == f.mul(a.det(), b.det())
    assert Mat.identity(f, 4).det() == 1
    assert Mat.zero(f, 4).det() == 0


def test_companion_matrix_charpoly():
    f5 = make_field(5, 1)
    coeffs = (2, 3, 0, 1, 1)  # t^4 + t^3 + 3t + 2
    comp = Mat(
        f5,
        [
            [0, 0, 0, f5.neg(coeffs[0])],
            [1, 0, 0, f5.neg(coeffs[1])],
            [0, 1, 0, f5.neg(coeffs[2])],
            [0, 0, 1, f5.neg(coeffs[3])],
        ],
    )
    assert comp.charpoly().coeffs == coeffs


def test_permutation_matrix_order_and_det():
    f2 = make_field(2, 1)
    perm = Mat(
        f2, [[1 if j == (i + 1) % 11 else 0 for j in range(11)] for i in range(11)]
    )
    assert perm.order() == 11
    assert perm.det() == 1  # even permutation
    assert (perm**11).is_identity
    assert not (perm**5).is_identity


def test_primitive_companion_order():
    f3 = make_field(3, 1)
    # t^2 - t - 1 is primitive over GF(3)
    g = Mat(f3, [[0, 1], [1, 1]])
    assert g.order() == 8


def test_order_rejects_singular():
    f3 = make_field(3, 1)
    with pytest.raises(Singular):
        Mat(f3, [[1, 2], [2, 1]]).order()


def test_pow_and_identity():
    f5 = make_field(5, 1)
    m = Mat(f5, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert m**0 == Mat.identity(f5, 3)
    assert m**3 == m * m * m
    o = m.order()
    assert (m**o).is_identity
    assert all(not (m**i).is_identity for i in range(1, min(o, 30)))


def test_wrong_shapes_rejected():
    f3 = make_field(3, 1)
    with pytest.raises(WrongShape):
        Mat(f3, [[1, 2], [1]])
    with pytest.raises(WrongShape):
        Mat(f3, [])
    a = Mat(f3, [[1, 0], [0, 1]])
    b = Mat(f3, [[1]])
    with pytest.raises(WrongShape):
        a * b


def test_distinct_degree_components():
    f3 = make_field(3, 1)
    lin = Poly.x_minus(f3, 1)
    a = Poly(f3, (1, 0, 1)) * Poly(f3, (2, 1, 1)) * lin * lin * lin
    comps = factor_degree_components(a)
    assert [(d, g.coeffs) for d, g in comps] == [
        (1, Poly.x_minus(f3, 1).coeffs),
        (2, (Poly(f3, (1, 0, 1)) * Poly(f3, (2, 1, 1))).coeffs),
    ]


def test_kernel_and_rank():
    f5 = make_field(5, 1)
    rows = [[1, 2, 3], [2, 4, 1], [3, 1, 4]]
    kb = kernel(f5, rows)
    m = Mat(f5, rows)
    for v in kb:
        assert all(c == 0 for c in m.apply(v))
    rs = RowSpace(f5, 3)
    for row in rows:
        rs.add(row)
    assert rs.dim + len(kb) == 3
    # kernel basis vectors are independent
    ind = RowSpace(f5, 3)
    for v in kb:
        assert ind.add(v)
    # full-rank matrix has trivial kernel
    assert kernel(f5, [[1, 0], [1, 1]]) == []


def test_rowspace_membership():
    f3 = make_field(3, 1)
    rs = RowSpace(f3, 4)
    assert rs.add((1, 2, 0, 1))
    assert rs.add((0, 1, 1, 0))
    assert not rs.add((1, 0, 1, 1))  # (1,2,0,1) - 2*(0,1,1,0)
    assert rs.dim == 2
    assert rs.contains((2, 2, 1, 2))
    assert not rs.contains((0, 0, 0, 1))


def test_eval_word():
    f3 = make_field(3, 1)
    x = Mat(f3, [[0, 1], [1, 0]])
    y = Mat(f3, [[0, 2], [1, 2]])
    assert (y**3).is_identity
    w = eval_word(("x", "y", "x", "yy"), x, y)
    assert w == x * y * x * (y * y)
    with pytest.raises(ValueError):
        eval_word((), x, y)


def test_check_word_normalization():
    assert check_word(("x", "y", "x", "yy"))
    with pytest.raises(ValueError):
        check_word(())
    with pytest.raises(ValueError):
        check_word(("x", "x"))
    with pytest.raises(ValueError):
        check_word(("y", "yy"))
    with pytest.raises(ValueError):
        check_word(("z",))


def test_transpose():
    f5 = make_field(5, 1)
    m = Mat(f5, [[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    assert m.T.charpoly() == m.charpoly()
    assert m.T.T == m
    assert m.T.det() == m.det()


def test_apply_is_matrix_times_column():
    f3 = make_field(3, 1)
    m = Mat(f3, [[1, 2], [0, 1]])
    assert m.apply((1, 1)) == (0, 1)
    assert m.apply((1, 0)) == (1, 0)
    with pytest.raises(WrongShape):
        m.apply((1, 0, 0))
