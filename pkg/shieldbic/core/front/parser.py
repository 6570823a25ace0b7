import ply.yacc as yacc

from shieldbic.core.front.lexer import Lexer, Coord


class Row:
    def __init__(self, tokens, coord):
        self.tokens = tokens
        self.coord = coord

    def __len__(self):
        return len(self.tokens)


class Parser:
    """Row grammar for delimited numeric text.

    ``delimiter`` is ``','`` for comma separated input or ``None`` for
    whitespace separated input; the other separator is reported as an error.
    Parsed rows are collected in :attr:`rows` in file order.
    """

    def __init__(self, errors, delimiter=None):
        self.errors = errors
        self.delimiter = delimiter
        self.rows = []
        self.lexer = Lexer(errors)
        self.lexer.build()
        self.tokens = self.lexer.tokens
        self.parser = yacc.yacc(module=self, debug=False, write_tables=False)

    def parse(self, input_text):
        if not input_text.endswith('\n'):
            input_text += '\n'
        self.parser.parse(input_text, lexer=self.lexer.lexer)
        return self.rows

    def p_matrix(self, p):
        """matrix : matrix row
                  | row"""

    def p_row(self, p):
        """row : values NEWLINE"""
        first = p[1][0]
        row = Row(p[1], Coord(first[1], first[2]))
        self.rows.append(row)
        p[0] = row

    def p_values_comma(self, p):
        """values : values COMMA NUMBER"""
        if self.delimiter != ',':
            self.errors.syntax_error("unexpected ','", p[2][1], p[2][2])
        p[0] = p[1]
        p[0].append(p[3])

    def p_values_space(self, p):
        """values : values NUMBER"""
        if self.delimiter == ',':
            self.errors.syntax_error("missing ',' before '%s'" % p[2][0], p[2][1], p[2][2])
        p[0] = p[1]
        p[0].append(p[2])

    def p_values_first(self, p):
        """values : NUMBER"""
        p[0] = [p[1]]

    def p_error(self, p):
        if p is not None:
            self.errors.syntax_error("unexpected token '%s'" % p.value[0].replace('\n', '\\n'),
                                     p.value[1], p.value[2])
        else:
            self.errors.syntax_error("unexpected end-of-file")
