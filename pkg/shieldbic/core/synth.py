"""Synthetic matrices with planted additive bi-clusters, and recovery scores."""
import numpy as np

from shieldbic.core.rep.matrix import Bicluster, ExpressionMatrix


def planted_matrix(shape, blocks, low=0.0, high=800.0, noise=0.0, seed=None,
                   row_effect=(0.0, 100.0), col_effect=(300.0, 400.0)):
    """Uniform background on [low, high] with additive blocks written over it.

    Every block follows the same pattern ``u_i + v_j`` (plus gaussian noise of
    standard deviation ``noise``), so blocks that overlap agree on the shared
    entries.  ``blocks`` is a sequence of (rows, cols) pairs.  Returns the
    matrix and the planted blocks as bi-clusters scored on the final matrix.
    """
    rng = np.random.default_rng(seed)
    n_rows, n_cols = shape
    values = rng.uniform(low, high, size=shape)
    u = rng.uniform(*row_effect, size=n_rows)
    v = rng.uniform(*col_effect, size=n_cols)
    for rows, cols in blocks:
        rows, cols = np.asarray(rows), np.asarray(cols)
        pattern = u[rows, None] + v[None, cols]
        if noise:
            pattern = pattern + rng.normal(0.0, noise, size=pattern.shape)
        values[np.ix_(rows, cols)] = pattern
    matrix = ExpressionMatrix(values)
    return matrix, [Bicluster.of(matrix, rows, cols) for rows, cols in blocks]


def overlapping_blocks(shape, size, shared_rows, shared_cols, rng):
    """Two blocks of ``size`` sharing exactly ``shared_rows`` rows and ``shared_cols`` columns."""
    n_rows, n_cols = shape
    rows = rng.permutation(n_rows)[:2 * size[0] - shared_rows]
    cols = rng.permutation(n_cols)[:2 * size[1] - shared_cols]
    first = (np.sort(rows[:size[0]]), np.sort(cols[:size[1]]))
    second = (np.sort(rows[size[0] - shared_rows:]), np.sort(cols[size[1] - shared_cols:]))
    return [first, second]


def jaccard(a, b):
    """Jaccard index of two bi-clusters over their (row, col) index pairs."""
    shared = len(set(a.rows) & set(b.rows)) * len(set(a.cols) & set(b.cols))
    union = len(a.rows) * len(a.cols) + len(b.rows) * len(b.cols) - shared
    return shared / union if union else 0.0


def best_match(block, found):
    return max((jaccard(block, other) for other in found), default=0.0)


def table_one_fixture():
    """The random-interference example: a 5x4 matrix whose last column held
    0 and 90 in rows 4 and 5 before they were masked with 6 and 9.

    Returns (true matrix, masked matrix, rows, cols) with 0-based indices of
    the sub-matrix that only looks coherent after masking.
    """
    true = np.array([
        [52.0, 17.0, 66.0, 38.0],
        [1.0, 2.0, 0.0, 3.0],
        [29.0, 71.0, 12.0, 85.0],
        [4.0, 5.0, 10.0, 0.0],
        [7.0, 8.0, 15.0, 90.0],
    ])
    masked = true.copy()
    masked[3, 3] = 6.0
    masked[4, 3] = 9.0
    return ExpressionMatrix(true), ExpressionMatrix(masked), (1, 3, 4), (0, 1, 3)
