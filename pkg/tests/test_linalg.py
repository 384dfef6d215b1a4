"""Exact linear algebra: frozen examples plus randomized oracle comparisons."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverrep.linalg import (
    Field,
    Matrix,
    QQ,
    cokernel_basis,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
)

from oracles import gauss_rank, rank_by_minors

F2 = Field.prime(2)
F5 = Field.prime(5)


def mat(field, rows, cols=None):
    return Matrix.from_rows(field, rows, cols=cols)


class TestField:
    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            Field.prime(6)
        with pytest.raises(ValueError):
            Field(9)

    def test_canonical_forms(self):
        assert F5.canon(7) == 2
        assert F5.canon(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
        assert QQ.canon(4) == Fraction(4)

    def test_parse_and_format_round_trip(self):
        for token in ["3", "-2", "7/4", "-9/5"]:
            assert QQ.format(QQ.parse(token)) == token
        assert F5.parse("7/4") == F5.canon(Fraction(7, 4))


class TestRank:
    def test_empty_matrix(self):
        assert rank(Matrix.zeros(QQ, 0, 0)) == 0

    def test_identity_over_f2(self):
        assert rank(Matrix.identity(F2, 2)) == 2

    def test_rank_one_rational(self):
        assert rank(mat(QQ, [[2, 4], [1, 2]])) == 1

    def test_rank_equals_transpose_rank(self):
        a = mat(QQ, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        assert rank(a) == rank(a.transpose()) == 2


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(Matrix.identity(QQ, 3)) == []

    def test_zero_matrix_full_kernel(self):
        assert len(kernel_basis(Matrix.zeros(QQ, 2, 3))) == 3

    def test_row_vector_kernel(self):
        (v,) = kernel_basis(mat(QQ, [[1, 1]]))
        assert v[0] == -v[1] != 0

    def test_kernel_vectors_annihilated(self):
        a = mat(F5, [[1, 2, 3], [4, 0, 1]])
        for v in kernel_basis(a):
            col = Matrix(F5, 3, 1, v)
            assert (a @ col).is_zero()


class TestCokernel:
    def test_surjective_map(self):
        assert cokernel_basis(Matrix.identity(QQ, 2)) == []

    def test_zero_map(self):
        assert len(cokernel_basis(Matrix.zeros(QQ, 3, 2))) == 3

    def test_column_inclusion(self):
        a = mat(QQ, [[1], [0]])
        (rep,) = cokernel_basis(a)
        # the representative is congruent to (0, 1) modulo the image
        diff = [rep[0] - 0, rep[1] - 1]
        assert solve(a, diff) is not None


class TestSolve:
    def test_identity(self):
        assert solve(Matrix.identity(QQ, 2), [3, 4]) == (Fraction(3), Fraction(4))

    def test_underdetermined_solution_verifies(self):
        a = mat(QQ, [[1, 1]])
        x = solve(a, [2])
        assert x is not None and x[0] + x[1] == 2

    def test_inconsistent(self):
        assert solve(Matrix.zeros(QQ, 2, 2), [1, 0]) is None

    def test_length_check(self):
        with pytest.raises(ValueError):
            solve(Matrix.zeros(QQ, 2, 2), [1, 0, 0])


def test_inverse_round_trip():
    a = mat(QQ, [[1, 2], [3, 5]])
    assert a @ inverse(a) == Matrix.identity(QQ, 2)
    with pytest.raises(ValueError):
        inverse(mat(QQ, [[1, 2], [2, 4]]))


entry_st = st.integers(min_value=-6, max_value=6)


def matrix_strategy(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(entry_st, min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


@settings(max_examples=80, deadline=None)
@given(rows=matrix_strategy())
def test_rank_matches_minor_expansion_oracle(rows):
    for field, p in [(QQ, None), (F2, 2), (F5, 5)]:
        assert rank(Matrix.from_rows(field, rows)) == rank_by_minors(rows, p)


@settings(max_examples=80, deadline=None)
@given(rows=matrix_strategy(max_dim=5))
def test_rank_nullity_and_transpose(rows):
    for field in (QQ, F2, F5):
        a = Matrix.from_rows(field, rows)
        assert len(kernel_basis(a)) + rank(a) == a.cols
        assert rank(a) == rank(a.transpose())


@settings(max_examples=80, deadline=None)
@given(rows=matrix_strategy(max_dim=5))
def test_bareiss_agrees_with_plain_gauss(rows):
    assert rank(Matrix.from_rows(QQ, rows)) == gauss_rank(rows)
    assert rank(Matrix.from_rows(F5, rows)) == gauss_rank(rows, 5)


@settings(max_examples=60, deadline=None)
@given(rows=matrix_strategy(max_dim=5))
def test_kernel_exactness_and_rref_idempotence(rows):
    for field in (QQ, F2):
        a = Matrix.from_rows(field, rows)
        for v in kernel_basis(a):
            assert (a @ Matrix(field, a.cols, 1, v)).is_zero()
        r1, piv1 = rref(a)
        r2, piv2 = rref(r1)
        assert r1 == r2 and piv1 == piv2


@settings(max_examples=60, deadline=None)
@given(
    rows=matrix_strategy(max_dim=4),
    xs=st.lists(entry_st, min_size=4, max_size=4),
)
def test_solve_verifies_by_substitution(rows, xs):
    for field in (QQ, F5):
        a = Matrix.from_rows(field, rows)
        x = Matrix(field, a.cols, 1, [field.canon(v) for v in xs[: a.cols]])
        b = a @ x
        got = solve(a, b.entries)
        assert got is not None
        assert a @ Matrix(field, a.cols, 1, got) == b


def test_rational_entries_reduced():
    a = mat(QQ, [[Fraction(2, 4), Fraction(6, 3)]])
    assert a.entries == (Fraction(1, 2), Fraction(2))


def test_prime_field_entries_reduced():
    a = mat(F5, [[7, -1], [10, 12]])
    assert a.entries == (2, 4, 0, 2)
