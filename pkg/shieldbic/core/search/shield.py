"""Shielding of found bi-clusters with imaginary components.

A found bi-cluster is not overwritten: each of its entries ``a`` becomes
``(1 + phi * rho[imag(a) != 0] * 1j) * a + phi * rho(a) * 1j`` where ``rho`` is
the unit impulse.  Real parts (the data) are untouched, so later searches can
still re-admit shielded rows and columns by their real-part scores, while the
imaginary parts inflate the modulus scores used for deletion.
"""
import logging

import numpy as np

from shieldbic.core.rep.matrix import Bicluster
from shieldbic.core.residue import row_msr, col_msr
from shieldbic.core.search.greedy import GreedySearch, SearchTrace

logger = logging.getLogger(__name__)


def unit_impulse(x):
    """1 where ``x`` is exactly zero (both parts for complex input), else 0."""
    result = np.where(np.asarray(x) == 0, 1, 0)
    if result.ndim == 0:
        return int(result)
    return result


class ShieldState:
    def __init__(self, matrix):
        self.matrix = matrix

    @property
    def shielded_count(self):
        return self.matrix.shielded_count

    def __repr__(self):
        return "<ShieldState %r>" % (self.matrix,)


def shield_block(block, phi):
    unshielded = unit_impulse(block.imag != 0)
    return (1 + phi * unshielded * 1j) * block + phi * unit_impulse(block) * 1j


def apply_shield(state, bicluster, params):
    index = np.ix_(bicluster.rows, bicluster.cols)
    before = state.shielded_count
    state.matrix.values[index] = shield_block(state.matrix.values[index], params.phi)
    logger.debug("shielded %r: %d -> %d shielded entries", bicluster, before, state.shielded_count)
    return state


def shielded_row_msr(state, bicluster, i):
    return row_msr(state.matrix, bicluster, i)


def shielded_col_msr(state, bicluster, j):
    return col_msr(state.matrix, bicluster, j)


def _indices(bicluster):
    return np.array(bicluster.rows), np.array(bicluster.cols)


def shielded_delete(state, bicluster, params):
    """Collective deletion of lines whose modulus score exceeds alpha times the
    mean line score, then single deletion by the largest modulus score when a
    round removes nothing."""
    search = GreedySearch(state.matrix.values, params)
    rows, cols = search.delete_multiple(*_indices(bicluster))
    rows, cols = search.delete_single(rows, cols)
    return Bicluster.of(state.matrix, rows, cols)


def shielded_add(state, bicluster, params):
    rows, cols = GreedySearch(state.matrix.values, params).add(*_indices(bicluster))
    return Bicluster.of(state.matrix, rows, cols)


def find_shielded_bicluster(state, params, shield=True, trace=None):
    """Search the partially shielded matrix from its full extent.

    The returned bi-cluster carries the score of its real parts.  With
    ``shield`` it is shielded in ``state`` before returning.
    """
    search = GreedySearch(state.matrix.values, params, trace if trace is not None else SearchTrace())
    rows, cols = search.run()
    bicluster = Bicluster.of(state.matrix, rows, cols, real=True)
    logger.debug("found %r (%s)", bicluster, search.trace)
    if shield:
        apply_shield(state, bicluster, params)
    return bicluster, state
