import time

import numpy as np
import pytest

from conftest import additive
from shieldbic.core import residue
from shieldbic.core.error import ContractError
from shieldbic.core.rep.matrix import Bicluster, ExpressionMatrix


def test_means_by_hand(hand_matrix):
    matrix, bicluster = hand_matrix
    assert residue.row_mean(matrix, bicluster, 0) == 1.5
    assert residue.row_mean(matrix, bicluster, 1) == 4.0
    assert residue.col_mean(matrix, bicluster, 0) == 2.0
    assert residue.col_mean(matrix, bicluster, 1) == 3.5
    assert residue.overall_mean(matrix, bicluster) == 2.75


def test_residues_by_hand(hand_matrix):
    matrix, bicluster = hand_matrix
    assert residue.residue(matrix, bicluster, 0, 0) == 0.25
    assert residue.residue(matrix, bicluster, 0, 1) == -0.25
    assert residue.residue(matrix, bicluster, 1, 0) == -0.25
    assert residue.residue(matrix, bicluster, 1, 1) == 0.25


def test_scores_by_hand(hand_matrix):
    matrix, bicluster = hand_matrix
    assert residue.msr(matrix, bicluster) == 0.0625
    assert bicluster.msr == 0.0625
    assert residue.variance(matrix, bicluster) == 8.75
    assert residue.row_msr(matrix, bicluster, 0) == 0.0625
    assert residue.col_msr(matrix, bicluster, 1) == 0.0625


def test_single_column_mean_is_the_entry(hand_matrix):
    matrix, _ = hand_matrix
    column = Bicluster.of(matrix, [0, 1], [1])
    assert residue.row_mean(matrix, column, 1) == 5.0
    row = Bicluster.of(matrix, [1], [0, 1])
    assert residue.col_mean(matrix, row, 0) == 3.0


def test_constant_matrix():
    matrix = ExpressionMatrix(np.full((4, 3), 7.25))
    bicluster = Bicluster.full(matrix)
    assert residue.row_mean(matrix, bicluster, 2) == 7.25
    assert residue.col_mean(matrix, bicluster, 1) == 7.25
    assert residue.overall_mean(matrix, bicluster) == 7.25
    assert residue.variance(matrix, bicluster) == 0.0
    assert residue.msr(matrix, bicluster) == 0.0
    assert residue.col_msr(matrix, bicluster, 0) == 0.0


def test_one_by_one_bicluster(hand_matrix):
    matrix, _ = hand_matrix
    single = Bicluster.of(matrix, [1], [1])
    assert residue.overall_mean(matrix, single) == 5.0
    assert residue.residue(matrix, single, 1, 1) == 0
    assert residue.variance(matrix, single) == 0.0
    assert residue.msr(matrix, single) == 0.0


def test_additive_pattern_has_zero_residue():
    matrix = ExpressionMatrix([[1.0, 2.0], [3.0, 4.0]])
    bicluster = Bicluster.full(matrix)
    assert residue.msr(matrix, bicluster) == 0.0
    for i in range(2):
        for j in range(2):
            assert residue.residue(matrix, bicluster, i, j) == 0
        assert residue.row_msr(matrix, bicluster, i) == 0.0


def test_degenerate_lines_score_exactly_zero(rng):
    matrix = ExpressionMatrix(rng.uniform(0, 800, size=(6, 5)))
    for i in range(6):
        assert residue.msr(matrix, Bicluster.of(matrix, [i], range(5))) == 0.0
    for j in range(5):
        assert residue.msr(matrix, Bicluster.of(matrix, range(6), [j])) == 0.0


def test_randomized_additive_and_shift_invariance(rng):
    start = time.perf_counter()
    for _ in range(1000):
        n_rows, n_cols = rng.integers(1, 51, size=2)
        values = additive(rng, n_rows, n_cols)
        matrix = ExpressionMatrix(values)
        assert residue.msr(matrix, Bicluster.full(matrix)) <= 1e-9

        noisy = ExpressionMatrix(values + rng.normal(0, 10, size=values.shape))
        shifted = ExpressionMatrix(noisy.real + rng.uniform(-1000, 1000))
        base = residue.msr(noisy, Bicluster.full(noisy))
        moved = residue.msr(shifted, Bicluster.full(shifted))
        assert moved == pytest.approx(base, rel=1e-9, abs=1e-12)
    assert time.perf_counter() - start < 5


def test_shift_leaves_residues_unchanged(rng):
    values = rng.uniform(0, 10, size=(7, 4))
    matrix = ExpressionMatrix(values)
    shifted = ExpressionMatrix(values + 123.5)
    bicluster = Bicluster.of(matrix, [0, 2, 3, 6], [0, 1, 3])
    for i in bicluster.rows:
        for j in bicluster.cols:
            assert residue.residue(shifted, bicluster, i, j) == \
                pytest.approx(residue.residue(matrix, bicluster, i, j), abs=1e-9)


def test_aggregation_identity(rng):
    for _ in range(20):
        matrix = ExpressionMatrix(rng.uniform(0, 800, size=(9, 6)))
        bicluster = Bicluster.of(matrix, [0, 1, 4, 5, 8], [1, 2, 3, 5])
        score = residue.msr(matrix, bicluster)
        by_rows = np.mean([residue.row_msr(matrix, bicluster, i) for i in bicluster.rows])
        by_cols = np.mean([residue.col_msr(matrix, bicluster, j) for j in bicluster.cols])
        assert by_rows == pytest.approx(score, rel=1e-12)
        assert by_cols == pytest.approx(score, rel=1e-12)


def test_addition_scores_match_extended_bicluster(rng):
    matrix = ExpressionMatrix(rng.uniform(0, 800, size=(8, 7)))
    bicluster = Bicluster.of(matrix, [0, 2, 3, 5], [1, 2, 4])
    block = matrix.submatrix(bicluster)
    outside_cols = [0, 3, 5, 6]
    scores = residue.col_addition_scores(block, matrix.values[np.ix_(bicluster.rows, outside_cols)])
    for j, score in zip(outside_cols, scores):
        extended = Bicluster.of(matrix, bicluster.rows, bicluster.cols + (j,))
        assert score == pytest.approx(residue.col_msr(matrix, extended, j), rel=1e-9)
    outside_rows = [1, 4, 6, 7]
    scores = residue.row_addition_scores(block, matrix.values[np.ix_(outside_rows, bicluster.cols)])
    for i, score in zip(outside_rows, scores):
        extended = Bicluster.of(matrix, bicluster.rows + (i,), bicluster.cols)
        assert score == pytest.approx(residue.row_msr(matrix, extended, i), rel=1e-9)


def test_recomputed_score_matches_after_reshaping(rng):
    matrix = ExpressionMatrix(rng.uniform(0, 800, size=(6, 6)))
    bicluster = Bicluster.of(matrix, [0, 1, 2], [0, 1, 2])
    grown = Bicluster.of(matrix, bicluster.rows + (4,), bicluster.cols)
    assert grown.msr == pytest.approx(residue.msr(matrix, grown), rel=1e-9)
    assert grown == Bicluster(grown.rows, grown.cols)


@pytest.mark.parametrize("call", [
    lambda m, b: residue.row_mean(m, b, 1),
    lambda m, b: residue.col_mean(m, b, 1),
    lambda m, b: residue.residue(m, b, 0, 1),
    lambda m, b: residue.row_msr(m, b, 1),
    lambda m, b: residue.col_msr(m, b, 1),
])
def test_index_outside_bicluster(hand_matrix, call):
    matrix, _ = hand_matrix
    with pytest.raises(ContractError):
        call(matrix, Bicluster.of(matrix, [0], [0]))


def test_variance_rejects_shielded_entries():
    matrix = ExpressionMatrix([[1.0, 2.0 + 8.0j], [3.0, 4.0]])
    with pytest.raises(ContractError):
        residue.variance(matrix, Bicluster.full(matrix))


@pytest.mark.parametrize("rows, cols", [([], [0]), ([0, 0], [1]), ([0], [2]), ([-1], [0])])
def test_malformed_bicluster(hand_matrix, rows, cols):
    matrix, _ = hand_matrix
    with pytest.raises(ContractError):
        Bicluster.of(matrix, rows, cols)


@pytest.mark.parametrize("values", [[[1.0, float("nan")]], [[float("inf")]], [[]], [1.0, 2.0]])
def test_matrix_rejects_bad_values(values):
    with pytest.raises(ContractError):
        ExpressionMatrix(values)


def test_complex_score_is_modulus_of_summed_squares():
    matrix = ExpressionMatrix([[1.0, 2.0 + 2.0j, 0.0], [3.0, 5.0, 1.0j], [2.0, 2.0, 2.0]])
    bicluster = Bicluster.full(matrix)
    block = matrix.values
    r = block - block.mean(axis=1, keepdims=True) - block.mean(axis=0, keepdims=True) + block.mean()
    assert residue.msr(matrix, bicluster) == pytest.approx(abs((r ** 2).sum()) / 9, rel=1e-12)
    assert residue.msr_real(matrix, bicluster) == pytest.approx((r.real ** 2).sum() / 9, rel=1e-12)
