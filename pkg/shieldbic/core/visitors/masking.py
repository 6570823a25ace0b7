import numpy as np

from shieldbic.core.search.greedy import mask_random
from shieldbic.core.search.shield import apply_shield


class RandomMaskVisitor:
    def __init__(self, matrix, params, data_range):
        self.matrix = matrix
        self.rng = params.rng()
        self.data_range = data_range
        self.covered = np.zeros(matrix.shape, dtype=bool)

    def overlap(self, bicluster):
        return int(self.covered[np.ix_(bicluster.rows, bicluster.cols)].sum())

    def visit(self, bicluster):
        """
        Replaces the bi-cluster entries of the working matrix with random draws
        :param bicluster: Bicluster
        :return: None
        """
        self.matrix = mask_random(self.matrix, bicluster, self.rng, self.data_range)
        self.covered[np.ix_(bicluster.rows, bicluster.cols)] = True


class ShieldVisitor:
    def __init__(self, state, params):
        self.state = state
        self.params = params

    @property
    def matrix(self):
        return self.state.matrix

    def overlap(self, bicluster):
        return int(self.state.matrix.shielded_mask[np.ix_(bicluster.rows, bicluster.cols)].sum())

    def visit(self, bicluster):
        apply_shield(self.state, bicluster, self.params)
