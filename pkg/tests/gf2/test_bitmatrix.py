#!/usr/bin/env python3
"""Tests for bit-packed GF(2) matrices"""
from collections import Counter

import numpy as np
import pytest

from src.core.errors import InvalidArgumentError
from src.gf2.bitmatrix import (
    BitMatrix,
    random_matrix,
    rank,
    rank_packed,
    rank_of_row_masks,
    stack_block_angular,
)
from src.gf2.enumeration import enumerate_rank_distribution
from src.gf2.shapes import MatrixShape
from tests.helpers import within_standard_errors


@pytest.mark.unit
class TestBitMatrix:
    """Test packing and basic operations"""

    def test_dense_round_trip_across_word_boundary(self, rng):
        """Columns beyond 64 land in the second word"""
        dense = rng.integers(0, 2, size=(5, 70), dtype=np.uint8)
        mat = BitMatrix.from_dense(dense)

        assert mat.rows == 5
        assert mat.cols == 70
        assert mat.words.shape == (5, 2)
        assert np.array_equal(mat.to_dense(), dense)

    def test_little_endian_bit_order(self):
        """Column j is bit j of the first word"""
        mat = BitMatrix.from_strings(["1000", "0010"])
        assert int(mat.words[0, 0]) == 1
        assert int(mat.words[1, 0]) == 4

    def test_padding_must_be_zero(self):
        with pytest.raises(InvalidArgumentError):
            BitMatrix(1, 3, np.array([[0b1000]], dtype=np.uint64))

    def test_storage_is_read_only(self):
        mat = BitMatrix.identity(3)
        with pytest.raises(ValueError):
            mat.words[0, 0] = 0

    def test_rejects_non_binary_entries(self):
        with pytest.raises(InvalidArgumentError):
            BitMatrix.from_dense([[0, 2]])

    def test_empty_matrix_keeps_columns(self):
        mat = BitMatrix.from_strings([], cols=4)
        assert mat.rows == 0
        assert mat.cols == 4
        assert rank(mat) == 0

    def test_take_rows_and_vstack(self):
        mat = BitMatrix.from_strings(["10", "01", "11"])
        picked = mat.take_rows(np.array([True, False, True]))
        assert picked == BitMatrix.from_strings(["10", "11"])

        stacked = picked.vstack(BitMatrix.from_strings(["01"]))
        assert stacked.rows == 3
        assert rank(stacked) == 2

    def test_vstack_column_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            BitMatrix.identity(2).vstack(BitMatrix.identity(3))

    def test_equality_and_hash(self):
        a = BitMatrix.from_strings(["101"])
        b = BitMatrix.from_dense([[1, 0, 1]])
        assert a == b
        assert hash(a) == hash(b)
        assert a != BitMatrix.from_strings(["100"])


@pytest.mark.unit
class TestRank:
    """Test rank computation"""

    @pytest.mark.parametrize("rows,expected", [
        (["00", "00"], 0),
        (["11", "11"], 1),
        (["10", "01"], 2),
        (["110", "011", "101"], 2),
        (["100", "010", "001", "111"], 3),
    ])
    def test_known_ranks(self, rows, expected):
        assert rank(BitMatrix.from_strings(rows)) == expected

    def test_identity_is_full_rank(self):
        assert rank(BitMatrix.identity(64)) == 64
        assert rank(BitMatrix.identity(130)) == 130

    def test_rank_does_not_mutate(self):
        mat = BitMatrix.from_strings(["11", "10"])
        before = mat.words.copy()
        rank(mat)
        assert np.array_equal(mat.words, before)

    def test_matches_xor_basis(self, rng):
        """Word-level elimination and the integer basis agree on both sides of a word"""
        for _ in range(200):
            m, k = int(rng.integers(0, 12)), int(rng.integers(1, 140))
            mat = random_matrix(MatrixShape(m=m, k=k), rng)
            masks = [int("".join(str(b) for b in row[::-1]), 2) for row in mat.to_dense()]
            expected = rank_of_row_masks(masks)
            assert rank(mat) == expected
            assert rank_packed(mat) == expected

    def test_wide_random_matrix_rank_bounded(self, rng):
        mat = random_matrix(MatrixShape(m=10, k=100), rng)
        assert rank(mat) <= 10

    def test_rank_of_row_masks(self):
        assert rank_of_row_masks([]) == 0
        assert rank_of_row_masks([0b11, 0b01, 0b10]) == 2
        assert rank_of_row_masks([0b100, 0b010, 0b001]) == 3


@pytest.mark.unit
class TestBlockAngular:
    """Test block angular layout"""

    def test_layout(self):
        a = BitMatrix.from_strings(["1"])
        b = BitMatrix.from_strings(["11"])
        c = BitMatrix.from_strings(["0"])
        d = BitMatrix.from_strings(["10"])

        stacked = stack_block_angular(a, b, c, d)
        assert stacked.to_dense().tolist() == [
            [1, 0, 0],
            [0, 1, 1],
            [0, 1, 0],
        ]
        assert rank(stacked) == 3

    def test_empty_bottom_band(self):
        stacked = stack_block_angular(
            BitMatrix.identity(2), BitMatrix.identity(1),
            BitMatrix.zeros(0, 2), BitMatrix.zeros(0, 1),
        )
        assert stacked.rows == 3
        assert rank(stacked) == 3

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            stack_block_angular(
                BitMatrix.identity(2), BitMatrix.identity(2),
                BitMatrix.zeros(1, 3), BitMatrix.zeros(1, 2),
            )
        with pytest.raises(InvalidArgumentError):
            stack_block_angular(
                BitMatrix.identity(2), BitMatrix.identity(2),
                BitMatrix.zeros(1, 2), BitMatrix.zeros(2, 2),
            )

    def test_random_matrix_is_seed_deterministic(self):
        shape = MatrixShape(m=4, k=70)
        first = random_matrix(shape, np.random.default_rng(7))
        second = random_matrix(shape, np.random.default_rng(7))
        assert first == second


@pytest.mark.unit
class TestRankInvariance:
    """Rank is a property of the row space"""

    SHAPES = [(3, 3), (6, 4), (4, 9), (12, 40), (8, 70), (70, 66)]

    @pytest.mark.parametrize("m,k", SHAPES)
    def test_row_permutation(self, m, k, rng):
        for _ in range(20):
            mat = random_matrix(MatrixShape(m=m, k=k), rng)
            permuted = mat.take_rows(rng.permutation(m))
            assert rank(permuted) == rank(mat)

    @pytest.mark.parametrize("m,k", SHAPES)
    def test_adding_one_row_to_another(self, m, k, rng):
        for _ in range(20):
            dense = random_matrix(MatrixShape(m=m, k=k), rng).to_dense()
            target, source = rng.choice(m, size=2, replace=False)
            added = dense.copy()
            added[target] ^= dense[source]
            assert rank(BitMatrix.from_dense(added)) == rank(BitMatrix.from_dense(dense))

    def test_duplicated_row_adds_nothing(self, rng):
        mat = random_matrix(MatrixShape(m=5, k=8), rng)
        assert rank(mat.vstack(mat.take_rows(np.array([2])))) == rank(mat)


SMALL_SHAPES = [(m, k) for m in range(1, 17) for k in range(1, 17) if m * k <= 16]


@pytest.mark.slow
class TestRandomMatrixDistribution:
    """Empirical rank frequencies of random_matrix against exact enumeration"""

    DRAWS = 100_000

    @pytest.mark.parametrize("m,k", SMALL_SHAPES)
    def test_rank_frequencies(self, m, k):
        shape = MatrixShape(m=m, k=k)
        rng = np.random.default_rng(1000 * m + k)
        counts = Counter(rank(random_matrix(shape, rng)) for _ in range(self.DRAWS))

        for r, exact in enumerate_rank_distribution(shape).items():
            assert within_standard_errors(counts[r] / self.DRAWS, float(exact), self.DRAWS), r
        assert set(counts) <= set(enumerate_rank_distribution(shape))

    def test_two_by_two_singular_fraction(self):
        rng = np.random.default_rng(2)
        shape = MatrixShape(m=2, k=2)
        singular = sum(rank(random_matrix(shape, rng)) < 2 for _ in range(self.DRAWS))
        assert within_standard_errors(singular / self.DRAWS, 0.625, self.DRAWS)
