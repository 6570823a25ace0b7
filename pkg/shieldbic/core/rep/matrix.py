from dataclasses import dataclass, field

import numpy as np

from shieldbic.core.error import ContractError
from shieldbic.core.residue import sub_msr, sub_msr_real


class ExpressionMatrix:
    """Dense n x m expression data stored as complex128.

    Loaded data is purely real; imaginary parts only appear once a found
    bi-cluster is shielded.  ``missing`` marks the entries that were imputed
    at load time so they can be drawn again for every repeat.
    """

    def __init__(self, values, missing=None, impute_range=None):
        values = np.array(values, dtype=np.complex128)
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise ContractError("expression matrix must be a non-empty 2-d grid, got shape %s"
                                % (values.shape,))
        if not np.all(np.isfinite(values)):
            raise ContractError("expression matrix contains NaN or infinite entries")
        self.values = values
        if missing is None:
            missing = np.zeros(values.shape, dtype=bool)
        self.missing = np.array(missing, dtype=bool)
        self.impute_range = impute_range

    def __repr__(self):
        return "<ExpressionMatrix %dx%d, %d shielded>" % (self.n_rows, self.n_cols,
                                                          self.shielded_count)

    @property
    def n_rows(self):
        return self.values.shape[0]

    @property
    def n_cols(self):
        return self.values.shape[1]

    @property
    def shape(self):
        return self.values.shape

    @property
    def real(self):
        return self.values.real

    @property
    def shielded_mask(self):
        return self.values.imag != 0

    @property
    def shielded_count(self):
        return int(np.count_nonzero(self.shielded_mask))

    def data_range(self):
        return float(self.real.min()), float(self.real.max())

    def copy(self):
        return ExpressionMatrix(self.values, self.missing, self.impute_range)

    def real_part(self):
        return ExpressionMatrix(self.values.real, self.missing, self.impute_range)

    def submatrix(self, bicluster):
        return self.values[np.ix_(bicluster.rows, bicluster.cols)]

    def imputed(self, rng):
        """Copy with every missing entry drawn again from ``impute_range``."""
        matrix = self.copy()
        count = int(np.count_nonzero(self.missing))
        if count and self.impute_range is not None:
            low, high = self.impute_range
            matrix.values[self.missing] = rng.uniform(low, high, size=count)
        return matrix


def _index_tuple(indices, bound, what):
    items = tuple(int(i) for i in indices)
    if not items:
        raise ContractError("bi-cluster needs at least one %s" % what)
    if len(set(items)) != len(items):
        raise ContractError("duplicate %s indices in bi-cluster" % what)
    if bound is not None and (min(items) < 0 or max(items) >= bound):
        raise ContractError("%s index out of range [0, %d)" % (what, bound))
    return tuple(sorted(items))


@dataclass(frozen=True)
class Bicluster:
    rows: tuple
    cols: tuple
    msr: float = field(default=0.0, compare=False)

    @classmethod
    def of(cls, matrix, rows, cols, real=False):
        """Build a bi-cluster over ``matrix`` with its score recomputed.

        With ``real`` the score is taken on the real parts of the entries.
        """
        rows = _index_tuple(rows, matrix.n_rows, "row")
        cols = _index_tuple(cols, matrix.n_cols, "column")
        block = matrix.values[np.ix_(rows, cols)]
        score = sub_msr_real(block) if real else sub_msr(block)
        return cls(rows, cols, score)

    @classmethod
    def full(cls, matrix):
        return cls.of(matrix, range(matrix.n_rows), range(matrix.n_cols))

    @property
    def n_rows(self):
        return len(self.rows)

    @property
    def n_cols(self):
        return len(self.cols)

    @property
    def size(self):
        return self.n_rows * self.n_cols

    def accept(self, visitor):
        return visitor.visit(self)

    def __repr__(self):
        return "<Bicluster %dx%d msr=%.4g>" % (self.n_rows, self.n_cols, self.msr)
