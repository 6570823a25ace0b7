"""Discovery of K bi-clusters per repeat and the paired strategy comparison."""
import logging

import numpy as np
import pandas as pd

from shieldbic.core.error import DegenerateBiclusterError
from shieldbic.core.rep.params import Strategy
from shieldbic.core.rep.report import BiclusterRecord, RunReport
from shieldbic.core.residue import sub_msr_real
from shieldbic.core.search.greedy import find_bicluster
from shieldbic.core.search.shield import ShieldState, find_shielded_bicluster
from shieldbic.core.synth import best_match
from shieldbic.core.visitors.masking import RandomMaskVisitor, ShieldVisitor
from shieldbic.core.visitors.printer import ReportLogVisitor

logger = logging.getLogger(__name__)


def _strategy_for(data, config, repeat):
    if config.strategy is Strategy.SHIELD:
        params = config.shield_params()
        masker = ShieldVisitor(ShieldState(data.copy()), params)

        def search():
            return find_shielded_bicluster(masker.state, params, shield=False)[0]
    else:
        params = config.greedy_params(repeat)
        masker = RandomMaskVisitor(data.copy(), params, data.data_range())

        def search():
            return find_bicluster(masker.matrix, params)
    return masker, search


def run_repeat(matrix, config, repeat):
    rng = np.random.default_rng(config.seed_sequence(repeat))
    data = matrix.imputed(rng)
    masker, search = _strategy_for(data, config, repeat)
    records = []
    for k in range(1, config.k_target + 1):
        try:
            bicluster = search()
        except DegenerateBiclusterError as e:
            records.append(BiclusterRecord(repeat=repeat, k=k, failure=str(e)))
            continue
        records.append(BiclusterRecord(
            repeat=repeat,
            k=k,
            rows=list(bicluster.rows),
            cols=list(bicluster.cols),
            msr=sub_msr_real(masker.matrix.submatrix(bicluster)),
            data_msr=sub_msr_real(data.submatrix(bicluster)),
            size=bicluster.size,
            overlap=masker.overlap(bicluster),
        ))
        bicluster.accept(masker)
    return records


def discover_all(matrix, config):
    """Find ``config.k_target`` bi-clusters in each of ``config.repeats`` repeats.

    Repeat ``r`` draws imputation and masking values from its own stream
    keyed by (seed, r), so any repeat can be rerun on its own.
    """
    logger.info("discovering %d bi-clusters x %d repeats with %s (delta=%g alpha=%g phi=%g)",
                config.k_target, config.repeats, config.strategy.value,
                config.delta, config.alpha, config.phi)
    report = RunReport(config=config, shape=matrix.shape)
    for repeat in range(config.repeats):
        report.records.extend(run_repeat(matrix, config, repeat))
        logger.info("repeat %d/%d done", repeat + 1, config.repeats)
    printer = ReportLogVisitor("[%s] " % config.strategy.value)
    report.accept_children(printer)
    if printer.failed:
        logger.warning("%d of %d searches found no bi-cluster", printer.failed, len(report.records))
    return report


class Comparison:
    def __init__(self, shield, random_mask, truth=None):
        self.shield = shield
        self.random_mask = random_mask
        self.truth = truth

    def reports(self):
        return {Strategy.SHIELD: self.shield, Strategy.RANDOM_MASK: self.random_mask}

    def recovery(self, strategy, repeat):
        """Best Jaccard of each truth block against one repeat's bi-clusters."""
        report = self.reports()[Strategy(strategy)]
        found = report.found(repeat)
        return [best_match(block, found) for block in self.truth]

    def table(self):
        shield = self.shield.summary().set_index("k")
        random_mask = self.random_mask.summary().set_index("k")
        ks = sorted(set(shield.index) | set(random_mask.index))
        columns = {}
        for name in ("msr_mean", "data_msr_mean", "size_mean"):
            columns[name + "_shield"] = shield[name].reindex(ks)
            columns[name + "_random"] = random_mask[name].reindex(ks)
            columns[name + "_delta"] = columns[name + "_shield"] - columns[name + "_random"]
        table = pd.DataFrame(columns, index=pd.Index(ks, name="k"))
        if self.truth is not None:
            for strategy, suffix in ((Strategy.SHIELD, "_shield"), (Strategy.RANDOM_MASK, "_random")):
                report = self.reports()[strategy]
                table["jaccard" + suffix] = [self._mean_jaccard(report, k) for k in ks]
        return table.reset_index()

    def _mean_jaccard(self, report, k):
        scores = [max(best_match(block, [r]) for block in self.truth)
                  for r in report.found() if r.k == k]
        return float(np.mean(scores)) if scores else float("nan")

    def deltas(self):
        shield, random_mask = self.shield.overall(), self.random_mask.overall()
        return {key: shield[key] - random_mask[key] for key in shield}


def compare_strategies(matrix, config, truth=None):
    """Run both strategies with identical seeds and pair their results."""
    shield = discover_all(matrix, config.with_strategy(Strategy.SHIELD))
    random_mask = discover_all(matrix, config.with_strategy(Strategy.RANDOM_MASK))
    comparison = Comparison(shield, random_mask, truth)
    logger.info("shield - random-mask: %s", comparison.deltas())
    return comparison
