from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel

from shieldbic.core.rep.params import RunConfig

SUMMARY_COLUMNS = ["k", "count", "msr_mean", "msr_std", "data_msr_mean", "data_msr_std",
                   "size_mean", "size_std"]


class BiclusterRecord(BaseModel):
    """One (repeat, k) outcome.

    ``msr`` is the real-part score the search accepted on its working matrix;
    ``data_msr`` is the score of the same index sets on the unmasked data.
    Indices are 0-based.  A failed search has ``failure`` set and no indices.
    """
    repeat: int
    k: int
    rows: List[int] = []
    cols: List[int] = []
    msr: Optional[float] = None
    data_msr: Optional[float] = None
    size: int = 0
    overlap: int = 0
    failure: Optional[str] = None

    @property
    def ok(self):
        return self.failure is None

    def accept(self, visitor):
        return visitor.visit(self)


class RunReport(BaseModel):
    config: RunConfig
    shape: Tuple[int, int]
    records: List[BiclusterRecord] = []

    def accept_children(self, visitor):
        for record in self.records:
            record.accept(visitor)

    def found(self, repeat=None):
        return [r for r in self.records if r.ok and (repeat is None or r.repeat == repeat)]

    def failures(self):
        return [r for r in self.records if not r.ok]

    def summary(self):
        """Per-k mean and (population) standard deviation across repeats."""
        found = self.found()
        if not found:
            return pd.DataFrame({c: pd.Series(dtype=float) for c in SUMMARY_COLUMNS})
        rows = []
        for k in sorted({r.k for r in found}):
            group = [r for r in found if r.k == k]
            msr = np.array([r.msr for r in group])
            data_msr = np.array([r.data_msr for r in group])
            size = np.array([r.size for r in group], dtype=float)
            rows.append({
                "k": k,
                "count": len(group),
                "msr_mean": float(msr.mean()),
                "msr_std": float(msr.std()),
                "data_msr_mean": float(data_msr.mean()),
                "data_msr_std": float(data_msr.std()),
                "size_mean": float(size.mean()),
                "size_std": float(size.std()),
            })
        return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)

    def overall(self):
        found = self.found()
        if not found:
            return {"msr_mean": float("nan"), "data_msr_mean": float("nan"), "size_mean": float("nan")}
        return {
            "msr_mean": float(np.mean([r.msr for r in found])),
            "data_msr_mean": float(np.mean([r.data_msr for r in found])),
            "size_mean": float(np.mean([r.size for r in found])),
        }
