import logging
import math

import numpy as np

from shieldbic.core.error import ErrorLog, MatrixFormatError
from shieldbic.core.front.parser import Parser
from shieldbic.core.rep.matrix import ExpressionMatrix
from shieldbic.core.rep.params import MatrixFormat

logger = logging.getLogger(__name__)

DELIMITERS = {
    MatrixFormat.YEAST_RAW: None,
    MatrixFormat.TSV: None,
    MatrixFormat.CSV: ',',
}


def parse_matrix(text, fmt=MatrixFormat.TSV, source="<string>"):
    """Parse delimited numeric text into a float array.

    Raises :class:`MatrixFormatError` listing every problem found (up to the
    error limit): non-numeric tokens, wrong separators, ragged rows and, for
    ``yeast-raw``, non-integer values.
    """
    fmt = MatrixFormat(fmt)
    errors = ErrorLog(source)
    if not text.strip():
        raise MatrixFormatError(source, ["empty file"])

    rows = Parser(errors, DELIMITERS[fmt]).parse(text)
    if not rows:
        errors.check()
        raise MatrixFormatError(source, ["no numeric rows"])

    width = len(rows[0])
    values = []
    for row in rows:
        if len(row) != width:
            errors.shape_error("expected %d values, found %d" % (width, len(row)), row.coord.line)
            continue
        line = []
        for text_value, lineno, column in row.tokens:
            value = float(text_value)
            if not math.isfinite(value):
                errors.value_error("value '%s' is not finite" % text_value, lineno, column)
            elif fmt is MatrixFormat.YEAST_RAW and not value.is_integer():
                errors.value_error("expected an integer, found '%s'" % text_value, lineno, column)
            line.append(value)
        values.append(line)
    errors.check()
    return np.array(values, dtype=float)


def load_matrix(spec, seed=0):
    """Read ``spec.path`` and replace sentinel entries with seeded uniform draws."""
    try:
        with open(spec.path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise MatrixFormatError(str(spec.path), ["cannot read file: %s" % e.strerror])
    values = parse_matrix(text, spec.format, str(spec.path))
    missing = values == spec.missing_sentinel
    matrix = ExpressionMatrix(values, missing, spec.impute_range).imputed(np.random.default_rng(seed))
    logger.info("loaded %s: %dx%d, %d missing entries imputed from [%g, %g]",
                spec.path, matrix.n_rows, matrix.n_cols, int(np.count_nonzero(missing)),
                spec.impute_low, spec.impute_high)
    return matrix
