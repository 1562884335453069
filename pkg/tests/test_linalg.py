from fractions import Fraction

import sympy as sp
from hypothesis import given, settings, strategies as st

import _oracles as orc
from rtalg.linalg import Subspace, nullspace, rank, rref, solve
from rtalg.scalars import QQ, QQ_q, QRatFunc

small = st.integers(-3, 3)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_and_nullspace_over_q(rows):
    n = len(rows[0])
    M = [[Fraction(x) for x in r] for r in rows]
    assert rank(M, n, QQ) == sp.Matrix(rows).rank()
    ker = nullspace(M, n, QQ)
    assert len(ker) == n - sp.Matrix(rows).rank()
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in M)


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3), st.lists(st.integers(-2, 2), min_size=3, max_size=3))
def test_rank_over_q_of_q(rows, shifts):
    n = len(rows[0])
    M = [[QRatFunc.coerce(x) * QRatFunc.q_power(shifts[j % 3]) + (QRatFunc.q_power(1) if x else 0)
          for j, x in enumerate(r)] for r in rows]
    S = sp.Matrix([[orc.qrat_to_sympy(x) for x in r] for r in M])
    assert rank(M, n, QQ_q) == S.rank(simplify=True)
    for v in nullspace(M, n, QQ_q):
        assert all(not sum((a * b for a, b in zip(r, v)), QQ_q.zero) for r in M)


def test_rref_shape():
    R, piv = rref([[2, 4], [1, 2]], 2, QQ)
    assert piv == [0]
    assert R[0] == [1, 2]


def test_solve_and_inconsistent():
    assert solve([[1, 1], [1, -1]], [3, 1], 2, QQ) == [2, 1]
    assert solve([[1, 1], [1, 1]], [1, 2], 2, QQ) is None


def test_subspace_reduce_is_linear_and_canonical():
    S = Subspace(3, QQ)
    assert S.add([Fraction(1), Fraction(1), Fraction(0)])
    assert not S.add([Fraction(2), Fraction(2), Fraction(0)])
    assert S.add([Fraction(0), Fraction(1), Fraction(1)])
    assert S.dim == 2
    assert S.contains([Fraction(1), Fraction(2), Fraction(1)])
    a = S.reduce([Fraction(1), 0, 0])
    b = S.reduce([Fraction(0), 0, 1])
    c = S.reduce([Fraction(1), 0, 1])
    assert [x + y for x, y in zip(a, b)] == c
