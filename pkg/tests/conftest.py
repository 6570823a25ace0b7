import numpy as np
import pytest

from shieldbic.core.rep.matrix import Bicluster, ExpressionMatrix


@pytest.fixture
def hand_matrix():
    matrix = ExpressionMatrix([[1.0, 2.0], [3.0, 5.0]])
    return matrix, Bicluster.full(matrix)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def additive(rng, n_rows, n_cols, scale=100.0):
    u = rng.uniform(-scale, scale, size=n_rows)
    v = rng.uniform(-scale, scale, size=n_cols)
    return u[:, None] + v[None, :]


def constant_block_matrix(shape, blocks, value=100.0, seed=0, high=800.0):
    """Uniform noise with constant-valued blocks; residues inside the blocks are exactly zero."""
    values = np.random.default_rng(seed).uniform(0.0, high, size=shape)
    for rows, cols in blocks:
        values[np.ix_(rows, cols)] = value
    return ExpressionMatrix(values)
