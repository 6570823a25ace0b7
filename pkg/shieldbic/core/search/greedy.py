"""Greedy delta-bi-cluster search: node deletion followed by node addition.

The same engine serves the random-masking baseline and the shielded search.
Deletion scores are the modulus form |sum r^2| / count.  Addition scores
are taken on real parts of the residues and compared against the modulus
score of the current bi-cluster.  On purely real data all of these are the
usual mean squared residues, so the shielded search run on an unshielded
matrix makes exactly the same moves as the baseline.
"""
import logging
from dataclasses import dataclass

import numpy as np

from shieldbic.core.error import DegenerateBiclusterError
from shieldbic.core.rep.matrix import Bicluster
from shieldbic.core.residue import (sub_msr, sub_msr_real, row_scores, col_scores,
                                    row_addition_scores, col_addition_scores)

logger = logging.getLogger(__name__)


@dataclass
class SearchTrace:
    multiple_rounds: int = 0
    multiple_deleted: int = 0
    single_deleted: int = 0
    added_rows: int = 0
    added_cols: int = 0


def within_budget(block, delta):
    return sub_msr(block) <= delta and sub_msr_real(block) <= delta


def deletion_threshold(block, scores):
    """Score that collective deletion multiplies by alpha.

    For a real block this is H.  With shielded entries the modulus is taken
    line by line before averaging: squared residues of opposite phase can
    cancel in the whole-block sum and leave it below every line score.  The
    per-line mean never falls below the whole-block modulus and equals it
    when every line sum has the same phase.
    """
    if not np.any(block.imag):
        return sub_msr(block)
    return float(np.mean(scores))


def _survivors(scores, threshold, what):
    keep = scores <= threshold
    if not keep.any():
        raise DegenerateBiclusterError("multiple node deletion removed every %s" % what)
    return keep


class GreedySearch:
    """Node deletion / addition over index arrays of one matrix.

    ``params`` only needs ``delta`` and ``alpha``.
    """

    def __init__(self, values, params, trace=None):
        self.values = values
        self.delta = params.delta
        self.alpha = params.alpha
        self.trace = trace if trace is not None else SearchTrace()

    def block(self, rows, cols):
        return self.values[np.ix_(rows, cols)]

    def delete_multiple(self, rows, cols):
        while True:
            block = self.block(rows, cols)
            if within_budget(block, self.delta):
                break
            self.trace.multiple_rounds += 1
            scores = row_scores(block)
            keep = _survivors(scores, self.alpha * deletion_threshold(block, scores), "row")
            removed = len(rows) - int(keep.sum())
            rows = rows[keep]

            block = self.block(rows, cols)
            if within_budget(block, self.delta):
                self.trace.multiple_deleted += removed
                break
            scores = col_scores(block)
            keep = _survivors(scores, self.alpha * deletion_threshold(block, scores), "column")
            removed += len(cols) - int(keep.sum())
            cols = cols[keep]

            self.trace.multiple_deleted += removed
            logger.debug("deletion round %d: removed %d lines, now %dx%d",
                         self.trace.multiple_rounds, removed, len(rows), len(cols))
            if removed == 0:
                break
        return rows, cols

    def delete_single(self, rows, cols):
        while True:
            block = self.block(rows, cols)
            if within_budget(block, self.delta):
                break
            rs = row_scores(block)
            cs = col_scores(block)
            i = int(np.argmax(rs))
            j = int(np.argmax(cs))
            if rs[i] >= cs[j]:
                rows = np.delete(rows, i)
            else:
                cols = np.delete(cols, j)
            if len(rows) == 0 or len(cols) == 0:
                raise DegenerateBiclusterError("single node deletion emptied the bi-cluster")
            self.trace.single_deleted += 1
        return rows, cols

    def _grow(self, members, candidates, scores, trial):
        # Admit every qualifying candidate at once if the budget allows it,
        # otherwise one by one in ascending score order.
        if len(candidates) == 0:
            return members
        score_h = sub_msr(trial(members))
        chosen = candidates[scores <= score_h]
        if len(chosen) == 0:
            return members
        grown = np.sort(np.concatenate([members, chosen]))
        if sub_msr_real(trial(grown)) <= self.delta:
            return grown
        order = np.argsort(scores, kind="stable")
        for index in order:
            if scores[index] > score_h:
                break
            attempt = np.sort(np.append(members, candidates[index]))
            if sub_msr_real(trial(attempt)) <= self.delta:
                members = attempt
        return members

    def add(self, rows, cols):
        n_rows, n_cols = self.values.shape
        while True:
            block = self.block(rows, cols)
            outside = np.setdiff1d(np.arange(n_cols), cols)
            scores = col_addition_scores(block, self.block(rows, outside)) if len(outside) else None
            new_cols = self._grow(cols, outside, scores, lambda c: self.block(rows, c))

            block = self.block(rows, new_cols)
            outside = np.setdiff1d(np.arange(n_rows), rows)
            scores = row_addition_scores(block, self.block(outside, new_cols)) if len(outside) else None
            new_rows = self._grow(rows, outside, scores, lambda r: self.block(r, new_cols))

            added_cols = len(new_cols) - len(cols)
            added_rows = len(new_rows) - len(rows)
            self.trace.added_cols += added_cols
            self.trace.added_rows += added_rows
            rows, cols = new_rows, new_cols
            if added_rows == 0 and added_cols == 0:
                break
            logger.debug("addition round: +%d rows +%d cols, now %dx%d",
                         added_rows, added_cols, len(rows), len(cols))
        return rows, cols

    def run(self, rows=None, cols=None):
        if rows is None:
            rows = np.arange(self.values.shape[0])
        if cols is None:
            cols = np.arange(self.values.shape[1])
        rows, cols = self.delete_multiple(np.asarray(rows), np.asarray(cols))
        rows, cols = self.delete_single(rows, cols)
        return self.add(rows, cols)


def _indices(bicluster):
    return np.array(bicluster.rows), np.array(bicluster.cols)


def multiple_node_deletion(matrix, bicluster, params):
    """Collective deletion of rows/columns scoring above alpha * H."""
    rows, cols = GreedySearch(matrix.values, params).delete_multiple(*_indices(bicluster))
    return Bicluster.of(matrix, rows, cols)


def single_node_deletion(matrix, bicluster, params):
    """Remove the single worst row or column until the budget holds.

    Ties go to rows, then to the smallest index.
    """
    rows, cols = GreedySearch(matrix.values, params).delete_single(*_indices(bicluster))
    return Bicluster.of(matrix, rows, cols)


def node_addition(matrix, bicluster, params):
    """Grow a delta-bi-cluster with every row/column that does not raise its score."""
    rows, cols = GreedySearch(matrix.values, params).add(*_indices(bicluster))
    return Bicluster.of(matrix, rows, cols)


def find_bicluster(matrix, params, trace=None):
    search = GreedySearch(matrix.values, params, trace)
    rows, cols = search.run()
    bicluster = Bicluster.of(matrix, rows, cols)
    logger.debug("found %r (%s)", bicluster, search.trace)
    return bicluster


def mask_random(matrix, bicluster, rng, data_range=None):
    """Copy of ``matrix`` with the bi-cluster entries replaced by uniform draws.

    Draws come from ``data_range`` (default: the observed range of ``matrix``).
    """
    low, high = data_range if data_range is not None else matrix.data_range()
    masked = matrix.copy()
    index = np.ix_(bicluster.rows, bicluster.cols)
    masked.values[index] = rng.uniform(low, high, size=(bicluster.n_rows, bicluster.n_cols))
    return masked
