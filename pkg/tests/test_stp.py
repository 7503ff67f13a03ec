"""Semitensor-product algebra: examples, identities, and error paths."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_matmul

from lcnsyn import (
    CELL_CAP,
    DenseMatrix,
    LogicalMatrix,
    MatrixSizeError,
    NotLogicalError,
    compress,
    expand,
    identity,
    kron,
    logical_identity,
    logical_stp_column,
    power_reducing_matrix,
    stp,
    swap_matrix,
)


def basis(n, i):
    """Dense basis vector d_n^i."""
    return expand(LogicalMatrix(n, (i,)))


def dense(rows):
    return DenseMatrix.from_rows(rows)


class TestKron:
    def test_identity_times_identity(self):
        assert kron(identity(2), identity(2)) == identity(4)

    def test_basis_vectors(self):
        assert kron(basis(2, 1), basis(2, 2)) == basis(4, 2)

    def test_hand_expanded_2x2(self):
        a = dense([[1, 2], [3, 4]])
        b = dense([[0, 1], [1, 0]])
        expected = dense([[0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]])
        assert kron(a, b) == expected

    def test_cap_guard(self):
        big = identity(1024)
        with pytest.raises(MatrixSizeError):
            kron(big, big)


class TestStp:
    def test_conformable_is_plain_product(self):
        rng = random.Random(7)
        for _ in range(50):
            n, k, m = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
            a = DenseMatrix(n, k, tuple(rng.randint(0, 5) for _ in range(n * k)))
            b = DenseMatrix(k, m, tuple(rng.randint(0, 5) for _ in range(k * m)))
            assert stp(a, b) == naive_matmul(a, b)

    def test_structure_matrix_times_state_and_input(self):
        l = expand(LogicalMatrix(4, (2, 2, 1, 3, 4, 4, 2, 2)))
        lx = stp(l, basis(4, 1))
        assert stp(lx, basis(2, 1)) == basis(4, 2)

    def test_basis_vector_stp_is_kron(self):
        assert stp(basis(2, 1), basis(2, 2)) == basis(4, 2)

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_associativity(self, data):
        def mat(name):
            r = data.draw(st.integers(1, 3), label=f"{name}.rows")
            c = data.draw(st.integers(1, 3), label=f"{name}.cols")
            e = data.draw(
                st.lists(st.integers(0, 4), min_size=r * c, max_size=r * c),
                label=f"{name}.entries",
            )
            return DenseMatrix(r, c, tuple(e))

        a, b, c = mat("a"), mat("b"), mat("c")
        assert stp(stp(a, b), c) == stp(a, stp(b, c))


class TestSwapMatrix:
    def test_2x2(self):
        assert swap_matrix(2, 2) == LogicalMatrix(4, (1, 3, 2, 4))

    def test_degenerate(self):
        for n in range(1, 5):
            assert swap_matrix(1, n) == logical_identity(n)
            assert swap_matrix(n, 1) == logical_identity(n)

    def test_swaps_basis_factors(self):
        w = expand(swap_matrix(2, 2))
        xy = stp(basis(2, 1), basis(2, 2))
        assert stp(w, xy) == stp(basis(2, 2), basis(2, 1)) == basis(4, 3)

    @pytest.mark.parametrize("m", range(1, 5))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_identities_exhaustive(self, m, n):
        w = expand(swap_matrix(m, n))
        w_rev = expand(swap_matrix(n, m))
        # transpose equals the reversed swap, and they invert each other
        assert w.transpose() == w_rev
        assert stp(w, w_rev) == identity(m * n)
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                p, q = basis(m, i), basis(n, j)
                # W (p stp q) = q stp p
                assert stp(w, stp(p, q)) == stp(q, p)
                # (p' stp q') W = q' stp p'
                lhs = stp(stp(p.transpose(), q.transpose()), w)
                assert lhs == stp(q.transpose(), p.transpose())


class TestPowerReducing:
    def test_k2(self):
        mat = power_reducing_matrix(2)
        assert mat == LogicalMatrix(4, (1, 4))
        assert (mat.rows, mat.cols) == (4, 2)

    def test_k1_degenerate(self):
        assert power_reducing_matrix(1) == logical_identity(1)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_squares_basis_vectors(self, k):
        red = expand(power_reducing_matrix(k))
        for i in range(1, k + 1):
            p = basis(k, i)
            assert stp(p, p) == stp(red, p)


class TestVectorPullout:
    """A stp z' == z' stp (I kron A) and z stp A == (I kron A) stp z."""

    def test_exhaustive_small(self):
        rng = random.Random(11)
        for _ in range(40):
            m, n = rng.randint(1, 3), rng.randint(1, 3)
            a = DenseMatrix(m, n, tuple(rng.randint(0, 3) for _ in range(m * n)))
            for t in range(1, 4):
                eye_a = kron(identity(t), a)
                for i in range(1, t + 1):
                    z = basis(t, i)
                    zt = z.transpose()
                    assert stp(a, zt) == stp(zt, eye_a)
                    assert stp(z, a) == stp(eye_a, z)


class TestCompressExpand:
    def test_expand_identity(self):
        assert expand(LogicalMatrix(2, (1, 2))) == identity(2)

    def test_compress_identity(self):
        assert compress(identity(3)) == logical_identity(3)

    def test_compress_repeated_column(self):
        assert compress(dense([[1, 1], [0, 0]])) == LogicalMatrix(2, (1, 1))

    def test_compress_rejects_non_logical(self):
        with pytest.raises(NotLogicalError):
            compress(dense([[1, 2], [0, 0]]))
        with pytest.raises(NotLogicalError):
            compress(dense([[1, 0], [1, 0]]))
        with pytest.raises(NotLogicalError):
            compress(dense([[1, 0], [0, 0]]))

    @given(
        st.integers(1, 6).flatmap(
            lambda n: st.tuples(
                st.just(n), st.lists(st.integers(1, n), min_size=1, max_size=8)
            )
        )
    )
    @settings(max_examples=80, deadline=None)
    def test_round_trip(self, case):
        n, cols = case
        lm = LogicalMatrix(n, tuple(cols))
        assert compress(expand(lm)) == lm

    def test_expand_rejects_bad_index(self):
        with pytest.raises(ValueError):
            expand(LogicalMatrix(2, (3,)))


class TestLogicalStpColumn:
    def test_reads_requested_column(self):
        lm = LogicalMatrix(4, (2, 2, 1, 3, 4, 4, 2, 2))
        assert logical_stp_column(lm, 3) == 1

    def test_identity(self):
        lm = logical_identity(5)
        for j in range(1, 6):
            assert logical_stp_column(lm, j) == j

    def test_big_network_first_column(self):
        lm = LogicalMatrix(8, (1, 1, 2, 3, 2, 3, 1, 4, 3, 5, 7, 6, 6, 7, 8, 1,
                               2, 3, 7, 6, 1, 2, 3, 4, 3, 4, 7, 8, 5, 6, 7, 4))
        assert logical_stp_column(lm, 1) == 1

    def test_agrees_with_dense_product(self, rng):
        for _ in range(30):
            n = rng.randint(1, 5)
            s = rng.randint(1, 6)
            lm = LogicalMatrix(n, tuple(rng.randint(1, n) for _ in range(s)))
            for j in range(1, s + 1):
                sel = stp(expand(lm), basis(s, j))
                assert compress(sel) == LogicalMatrix(n, (logical_stp_column(lm, j),))

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            logical_stp_column(logical_identity(3), 4)
        with pytest.raises(IndexError):
            logical_stp_column(logical_identity(3), 0)


def test_cell_cap_value():
    assert CELL_CAP == 1 << 20
