"""Report persistence.

An output directory holds ``biclusters.jsonl`` (a header object followed by
one record per (repeat, k)), ``summary.tsv`` (per-k mean/std across repeats)
and ``config.json``.  Row and column indices are 0-based.
"""
import json
import logging
from pathlib import Path

import pandas as pd

from shieldbic.core.error import ShieldbicError
from shieldbic.core.rep.params import MatrixFormat
from shieldbic.core.rep.report import BiclusterRecord

logger = logging.getLogger(__name__)

RECORDS_FILE = "biclusters.jsonl"
SUMMARY_FILE = "summary.tsv"
CONFIG_FILE = "config.json"
COMPARISON_FILE = "comparison.tsv"

HEADER = {"format": "shieldbic-biclusters", "version": 1, "indexing": "0-based"}


class ReportWriteError(ShieldbicError):
    pass


def _write(path, write):
    try:
        write(path)
    except OSError as e:
        raise ReportWriteError("cannot write %s: %s" % (path, e.strerror or e))
    logger.debug("wrote %s", path)


def _write_text(path, text):
    def write(p):
        with open(p, 'w', newline='\n') as f:
            f.write(text)
    _write(path, write)


def write_report(report, out_dir):
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ReportWriteError("cannot create %s: %s" % (out, e.strerror or e))

    lines = [json.dumps(HEADER, sort_keys=True)]
    lines += [record.model_dump_json() for record in report.records]
    _write_text(out / RECORDS_FILE, "\n".join(lines) + "\n")

    summary = report.summary()
    _write(out / SUMMARY_FILE, lambda p: summary.to_csv(p, sep="\t", index=False))

    config = report.config.model_dump(mode="json")
    config["shape"] = list(report.shape)
    _write_text(out / CONFIG_FILE, json.dumps(config, sort_keys=True, indent=2) + "\n")
    logger.info("wrote %d records to %s", len(report.records), out)
    return [out / RECORDS_FILE, out / SUMMARY_FILE, out / CONFIG_FILE]


def write_comparison(comparison, out_dir):
    out = Path(out_dir)
    paths = []
    for strategy, report in comparison.reports().items():
        paths += write_report(report, out / strategy.value)
    table = comparison.table()
    _write(out / COMPARISON_FILE, lambda p: table.to_csv(p, sep="\t", index=False))
    return paths + [out / COMPARISON_FILE]


def read_records(path):
    with open(path, 'r') as f:
        lines = [line for line in f.read().splitlines() if line.strip()]
    if not lines or json.loads(lines[0]).get("format") != HEADER["format"]:
        raise ShieldbicError("%s is not a bi-cluster record file" % path)
    return [BiclusterRecord.model_validate_json(line) for line in lines[1:]]


def read_summary(path):
    return pd.read_csv(path, sep="\t")


def _format_value(value, integral):
    if integral:
        return "%d" % value
    return repr(float(value))


def write_matrix(matrix, path, fmt=MatrixFormat.TSV):
    """Write the real data of ``matrix`` so that it parses back to the same values."""
    fmt = MatrixFormat(fmt)
    data = matrix.real
    integral = bool(((data == data.round()) & (abs(data) < 2 ** 53)).all())
    if fmt is MatrixFormat.YEAST_RAW and not integral:
        raise ShieldbicError("yeast-raw output requires integer data")
    separator = "," if fmt is MatrixFormat.CSV else ("\t" if fmt is MatrixFormat.TSV else " ")
    text = "".join(separator.join(_format_value(v, integral) for v in row) + "\n" for row in data)
    _write_text(Path(path), text)
