import re

import ply.lex as lex

_WORD = re.compile(r"[^\s,]+")


class Coord:
    def __init__(self, line, column):
        self.line = line
        self.column = column


class Lexer:
    tokens = [
        'NUMBER',
        'COMMA',
        'NEWLINE',
    ]

    t_ignore = ' \t\r'

    def __init__(self, errors):
        self.errors = errors
        self.lexer = None
        self.line_has_value = False

    def build(self, **kwargs):
        self.lexer = lex.lex(module=self, **kwargs)

    def token_column(self, t):
        last_cr = t.lexer.lexdata.rfind('\n', 0, t.lexpos)
        return t.lexpos - last_cr

    def t_NUMBER(self, t):
        r"""[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"""
        self.line_has_value = True
        t.value = (t.value, t.lineno, self.token_column(t))
        return t

    def t_COMMA(self, t):
        r""","""
        t.value = (t.value, t.lineno, self.token_column(t))
        return t

    def t_NEWLINE(self, t):
        r"""\n+"""
        line = t.lineno
        t.lexer.lineno += len(t.value)
        # Blank lines do not end a row.
        if self.line_has_value:
            self.line_has_value = False
            t.value = (t.value, line, self.token_column(t))
            return t

    def t_error(self, t):
        match = _WORD.match(t.value)
        word = match.group() if match else t.value[0]
        self.errors.lexical_error("non-numeric token '%s'" % word, t.lexer.lineno, self.token_column(t))
        self.line_has_value = True
        t.lexer.skip(len(word))
