import logging

logger = logging.getLogger(__name__)


class ReportLogVisitor:
    def __init__(self, label=""):
        self.label = label
        self.found = 0
        self.failed = 0

    def visit(self, record):
        if record.ok:
            self.found += 1
            logger.info("%srepeat %d k=%d: %dx%d msr=%.3f data_msr=%.3f overlap=%d",
                        self.label, record.repeat, record.k, len(record.rows), len(record.cols),
                        record.msr, record.data_msr, record.overlap)
        else:
            self.failed += 1
            logger.warning("%srepeat %d k=%d: no bi-cluster (%s)",
                           self.label, record.repeat, record.k, record.failure)
