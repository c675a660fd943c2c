from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieideals.exactnum import (
    DimensionMismatch,
    Subspace,
    companion_matrix,
    contains,
    determinant,
    factor_polynomial,
    format_rational,
    identity,
    is_squarefree,
    kernel,
    minimal_polynomial,
    parse_rational,
    quadratic_is_irreducible,
    rref,
    span_intersect,
    span_sum,
    spin,
    subspace_leq,
)

Q = Fraction


def canon(rows, n):
    return Subspace.span(rows, n)


def test_rational_roundtrip():
    assert parse_rational("3/6") == Q(1, 2)
    assert format_rational(Q(-4, 2)) == "-2"
    assert format_rational(Q(2, 3)) == "2/3"
    assert parse_rational(format_rational(Q(-7, 9))) == Q(-7, 9)


def test_rref_examples():
    m, piv = rref([[0, 0], [0, 0]])
    assert piv == () and Subspace.span(m, 2).basis == ()
    assert Subspace.span([[2, 4], [1, 2]], 2).basis == ((1, 2),)
    assert Subspace.span(identity(3), 3).basis == tuple(map(tuple, identity(3)))


def test_kernel_examples():
    assert kernel(identity(2), 2).is_zero()
    assert kernel([[1, 1]], 2) == canon([[1, -1]], 2)
    assert kernel([[0, 0], [0, 0]], 2).is_full()


def test_sum_and_intersection_examples():
    e1, e2 = canon([[1, 0, 0]], 3), canon([[0, 1, 0]], 3)
    assert span_sum(e1, Subspace.zero(3)) == e1
    assert span_sum(canon([[1, 0]], 2), canon([[0, 1]], 2)).is_full()
    assert span_sum(canon([[1, 1, 0]], 3), e1) == canon([[1, 0, 0], [0, 1, 0]], 3)
    assert span_intersect(e1, e1) == e1
    assert span_intersect(e1, e2).is_zero()
    a = canon([[1, 0, 0], [0, 1, 0]], 3)
    b = canon([[1, 1, 0], [0, 0, 1]], 3)
    assert span_intersect(a, b) == canon([[1, 1, 0]], 3)


def test_inclusion_examples():
    a = canon([[1, 2]], 2)
    assert subspace_leq(Subspace.zero(2), a)
    assert subspace_leq(canon([[1, 0, 0]], 3), canon([[1, 0, 0], [0, 1, 0]], 3))
    assert not subspace_leq(canon([[1, 1]], 2), canon([[1, 0]], 2))
    assert contains(a, [2, 4]) and not contains(a, [1, 0])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        span_sum(Subspace.zero(2), Subspace.zero(3))


small = st.integers(min_value=-3, max_value=3)


def matrices(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=4)


@settings(max_examples=60, deadline=None)
@given(matrices(4))
def test_rref_idempotent(m):
    r, _ = rref(m, 4)
    r2, _ = rref(r, 4)
    assert r == r2


@settings(max_examples=60, deadline=None)
@given(matrices(4))
def test_canonical_under_recombination(m):
    S = canon(m, 4)
    mixed = [[a + 2 * b for a, b in zip(r1, r2)] for r1, r2 in zip(m, m[1:] + m[:1])] + m
    assert canon(mixed, 4) == S


@settings(max_examples=60, deadline=None)
@given(matrices(4), matrices(4))
def test_dimension_formula(m1, m2):
    a, b = canon(m1, 4), canon(m2, 4)
    assert (a + b).dim + (a & b).dim == a.dim + b.dim
    assert a & b <= a and a <= a + b


@settings(max_examples=60, deadline=None)
@given(matrices(4), matrices(4), matrices(4))
def test_modular_law(m1, m2, m3):
    A, C = canon(m1, 4), canon(m3, 4)
    B = A + canon(m2, 4)
    assert B & (A + C) == A + (B & C)


def test_polynomials():
    assert minimal_polynomial([[2, 0], [0, 2]]) == (Q(-2), Q(1))
    assert minimal_polynomial(companion_matrix((1, 0, 1))) == (Q(1), Q(0), Q(1))
    assert quadratic_is_irreducible((1, 0, 1)) and not quadratic_is_irreducible((-4, 0, 1))
    assert dict(factor_polynomial((-1, 0, 1))) == {(Q(-1), Q(1)): 1, (Q(1), Q(1)): 1}
    assert is_squarefree((-1, 0, 1)) and not is_squarefree((1, -2, 1))
    assert determinant([[1, 2], [3, 4]]) == -2


def test_spin_reaches_invariant_span():
    shift = lambda v: [0] + list(v[:-1])  # noqa: E731
    assert spin([[1, 0, 0]], [shift], 3).dim == 3
    assert spin([[0, 0, 1]], [shift], 3).dim == 1
