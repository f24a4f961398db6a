from __future__ import annotations

from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from boundquiver import linalg as la

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def int_matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r))
    return la.qarray(rows, (r, c))


def _float(a):
    return np.array(a, dtype=float).reshape(a.shape)


@given(int_matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity_and_float_oracle(a):
    ns = la.nullspace(a)
    r = la.rank(a)
    assert ns.shape == (a.shape[1], a.shape[1] - r)
    assert la.is_zero(la.matmul(a, ns))
    if a.size:
        assert r == np.linalg.matrix_rank(_float(a))


@given(int_matrices())
@settings(max_examples=100, deadline=None)
def test_sparse_echelon_matches_dense(a):
    e = la.SparseEchelon()
    for row in a:
        e.add({j: x for j, x in enumerate(row) if x})
    assert e.rank == la.rank(a)
    vecs = e.nullspace(a.shape[1])
    assert len(vecs) == a.shape[1] - la.rank(a)
    for v in vecs:
        for row in a:
            assert sum(row[j] * c for j, c in v.items()) == 0


@given(int_matrices(), st.data())
@settings(max_examples=100, deadline=None)
def test_solve(a, data):
    x = la.qarray([[data.draw(small_ints)] for _ in range(a.shape[1])], (a.shape[1], 1))
    b = la.matmul(a, x)
    sol = la.solve(a, b)
    assert sol is not None
    assert la.equal(la.matmul(a, sol), b)


def test_solve_inconsistent():
    a = la.qarray([[1, 0], [0, 0]])
    assert la.solve(a, la.qarray([[0], [1]])) is None


@given(st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_inverse(n, data):
    # unitriangular times a permutation is always invertible
    u = la.identity(n)
    for i in range(n):
        for j in range(i + 1, n):
            u[i, j] = Fraction(data.draw(small_ints))
    perm = data.draw(st.permutations(range(n)))
    a = u[list(perm)]
    inv = la.inverse(a)
    assert la.equal(la.matmul(a, inv), la.identity(n))


def test_exact_fractions():
    a = la.qarray([["1/3", 1], [1, 3]])
    assert la.rank(a) == 1
    assert la.to_strings(la.qarray([["-1/2", 2]])) == [["-1/2", "2"]]
    assert la.fmt(Fraction(6, 4)) == "3/2"


def test_block_helpers():
    a = la.qarray([[1, 2]])
    b = la.qarray([[3]])
    d = la.block_diag([a, b])
    assert d.shape == (2, 3)
    assert la.to_strings(d) == [["1", "2", "0"], ["0", "0", "3"]]
    assert la.hstack([], 2).shape == (2, 0)
    assert la.trace(la.matrix_power(la.qarray([[1, 1], [0, 1]]), 3)) == 2
