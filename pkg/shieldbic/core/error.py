import logging

logger = logging.getLogger(__name__)

MAX_ERRORS = 5


class ShieldbicError(Exception):
    pass


class ContractError(ShieldbicError, ValueError):
    pass


class ConfigError(ShieldbicError, ValueError):
    pass


class DegenerateBiclusterError(ShieldbicError):
    pass


class MatrixFormatError(ShieldbicError):
    def __init__(self, source, messages):
        self.source = source
        self.messages = list(messages)
        super().__init__("%s: %s" % (source, "; ".join(self.messages)))


def diagnostic(func):
    def diagnostic_wrapper(self, msg, line=None, column=None):
        text = func(self, msg, line, column)
        self.messages.append(text)
        logger.error("%s: %s", self.source, text)
        if len(self.messages) >= self.limit:
            raise MatrixFormatError(self.source, self.messages)
    return diagnostic_wrapper


def _where(line, column):
    if line is None:
        return ""
    if column is None:
        return " [%d]" % line
    return " [%d:%d]" % (line, column)


class ErrorLog:
    """Collects file diagnostics; parsing stops after ``limit`` of them."""

    def __init__(self, source, limit=MAX_ERRORS):
        self.source = source
        self.limit = limit
        self.messages = []

    @property
    def count(self):
        return len(self.messages)

    @diagnostic
    def syntax_error(self, msg, line=None, column=None):
        return "syntax error: %s%s" % (msg, _where(line, column))

    @diagnostic
    def lexical_error(self, msg, line=None, column=None):
        return "lexical error: %s%s" % (msg, _where(line, column))

    @diagnostic
    def shape_error(self, msg, line=None, column=None):
        return "shape error: %s%s" % (msg, _where(line, column))

    @diagnostic
    def value_error(self, msg, line=None, column=None):
        return "value error: %s%s" % (msg, _where(line, column))

    def check(self):
        if self.messages:
            raise MatrixFormatError(self.source, self.messages)
