"""Exact linear algebra kernel: examples and algebraic properties."""

from fractions import Fraction as Q

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from liemult.linalg import Matrix, format_rational, span_rref


def test_rank_identity():
    assert Matrix.identity(3).rank() == 3


def test_rank_zero():
    assert Matrix.zero(2, 2).rank() == 0


def test_rank_dependent_rows():
    assert Matrix([[1, 2], [2, 4]]).rank() == 1


def test_nullspace_identity_empty():
    assert Matrix.identity(2).nullspace_basis() == []


def test_nullspace_difference():
    (v,) = Matrix([[1, -1]]).nullspace_basis()
    assert v[0] == v[1] != 0


def test_nullspace_dependent():
    m = Matrix([[1, 2], [2, 4]])
    (v,) = m.nullspace_basis()
    assert m.mul_vec(v) == (0, 0)
    # spans (2, -1)
    assert v[0] * (-1) == v[1] * 2


def test_rref_identity():
    assert Matrix.identity(4).rref() == Matrix.identity(4)


def test_rref_scaling():
    assert Matrix([[2, 4]]).rref() == Matrix([[1, 2]])


def test_rref_elimination():
    assert Matrix([[1, 1], [1, 2]]).rref() == Matrix.identity(2)


def test_rejects_floats():
    with pytest.raises(TypeError):
        Matrix([[0.5]])


def test_product_and_transpose():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a * b == Matrix([[2, 1], [4, 3]])
    assert a.transpose().transpose() == a


def test_span_rref_drops_zero_rows():
    m = span_rref([[0, 0], [1, 1], [2, 2]], 2)
    assert m.rows == 1 and m.data[0] == (1, 1)


def test_format_rational():
    assert format_rational(Q(3)) == "3"
    assert format_rational(Q(-2, 6)) == "-1/3"


fractions = st.builds(Q, st.integers(-6, 6), st.integers(1, 4))
matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(fractions, min_size=c, max_size=c), min_size=1, max_size=4)
).map(Matrix)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    assert m.rank() + len(m.nullspace_basis()) == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_transpose(m):
    assert m.rank() == m.transpose().rank()


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_nullspace_vectors_annihilate(m):
    for v in m.nullspace_basis():
        assert all(x == 0 for x in m.mul_vec(v))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_idempotent(m):
    r = m.rref()
    assert r.rref() == r
    assert r.rank() == m.rank()
