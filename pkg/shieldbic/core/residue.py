"""Residue algebra of a bi-cluster.

All means and residues are taken in complex arithmetic; on real data the
results reduce to the usual mean squared residue definitions.  Functions
named after a quantity (``row_mean``, ``msr``...) take an
:class:`~shieldbic.core.rep.matrix.ExpressionMatrix` and a
:class:`~shieldbic.core.rep.matrix.Bicluster`; the ``*_scores`` kernels work
directly on numpy blocks and are what the greedy searches call.
"""
import numpy as np

from shieldbic.core.error import ContractError


def _block(matrix, bicluster):
    return matrix.values[np.ix_(bicluster.rows, bicluster.cols)]


def _position(index, members, what):
    try:
        return members.index(index)
    except ValueError:
        raise ContractError("%s %r is not part of the bi-cluster" % (what, index))


def _degenerate(block):
    return block.shape[0] == 1 or block.shape[1] == 1


def _divide(total, count):
    # Parts divided separately: numpy's complex division multiplies by a
    # reciprocal, which would make real parts differ from real arithmetic.
    out = np.empty(np.shape(total), dtype=np.complex128)
    out.real = np.real(total) / count
    out.imag = np.imag(total) / count
    return out


def _mean(block, axis=None):
    if axis is None:
        return _divide(block.sum(), block.size)
    return _divide(block.sum(axis=axis, keepdims=True), block.shape[axis])


def residues(block):
    """Residue of every entry of ``block`` against its own row/column means."""
    if _degenerate(block):
        return np.zeros(block.shape, dtype=np.complex128)
    return block - _mean(block, 1) - _mean(block, 0) + _mean(block)


def sub_msr(block):
    """Modulus-form score |sum r^2| / (rows * cols)."""
    if _degenerate(block):
        return 0.0
    r = residues(block)
    return float(np.abs((r * r).sum())) / block.size


def sub_msr_real(block):
    """Score of the real parts: sum real(r)^2 / (rows * cols)."""
    if _degenerate(block):
        return 0.0
    r = residues(block).real
    return float((r * r).sum()) / block.size


def row_scores(block):
    if _degenerate(block):
        return np.zeros(block.shape[0])
    r = residues(block)
    return np.abs((r * r).sum(axis=1)) / block.shape[1]


def col_scores(block):
    if _degenerate(block):
        return np.zeros(block.shape[1])
    r = residues(block)
    return np.abs((r * r).sum(axis=0)) / block.shape[0]


def _addition_scores(inside, outside):
    # inside: |S| x |F| block; outside: |S| x p candidate columns.
    # Score of candidate j is the real-part score of column j within the
    # bi-cluster extended by j alone.
    n, m = inside.shape
    if n == 1:
        return np.zeros(outside.shape[1])
    row_sums = inside.sum(axis=1, keepdims=True)
    total = inside.sum()
    cand_sums = outside.sum(axis=0, keepdims=True)
    row_means = _divide(row_sums + outside, m + 1)
    col_means = _divide(cand_sums, n)
    overall = _divide(total + cand_sums, n * (m + 1))
    r = (outside - row_means - col_means + overall).real
    return (r * r).sum(axis=0) / n


def col_addition_scores(block, candidates):
    """Real-part column scores of each candidate column.

    ``block`` is the bi-cluster sub-matrix and ``candidates`` the same rows
    restricted to the columns being considered for addition.
    """
    return _addition_scores(block, candidates)


def row_addition_scores(block, candidates):
    """Real-part row scores of each candidate row (``candidates`` is p x |F|)."""
    return _addition_scores(block.T, candidates.T)


def row_mean(matrix, bicluster, i):
    _position(i, bicluster.rows, "row")
    return complex(_mean(matrix.values[i, list(bicluster.cols)]))


def col_mean(matrix, bicluster, j):
    _position(j, bicluster.cols, "column")
    return complex(_mean(matrix.values[list(bicluster.rows), j]))


def overall_mean(matrix, bicluster):
    return complex(_mean(_block(matrix, bicluster)))


def residue(matrix, bicluster, i, j):
    _position(i, bicluster.rows, "row")
    _position(j, bicluster.cols, "column")
    a = complex(matrix.values[i, j])
    return a - row_mean(matrix, bicluster, i) - col_mean(matrix, bicluster, j) \
        + overall_mean(matrix, bicluster)


def variance(matrix, bicluster):
    """Unnormalised sum of squared deviations from the bi-cluster mean."""
    block = _block(matrix, bicluster)
    if np.any(block.imag != 0):
        raise ContractError("variance is only defined on unshielded entries")
    deviations = block.real - block.real.mean()
    return float((deviations * deviations).sum())


def msr(matrix, bicluster):
    return sub_msr(_block(matrix, bicluster))


def msr_real(matrix, bicluster):
    return sub_msr_real(_block(matrix, bicluster))


def row_msr(matrix, bicluster, i):
    position = _position(i, bicluster.rows, "row")
    return float(row_scores(_block(matrix, bicluster))[position])


def col_msr(matrix, bicluster, j):
    position = _position(j, bicluster.cols, "column")
    return float(col_scores(_block(matrix, bicluster))[position])
