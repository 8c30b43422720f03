"""
Parser and renderer for monotone formula text.

Grammar:
    formula :: or
    or      :: and ('|' and)*
    and     :: atom ('&' atom)*
    atom    :: NAME | '(' formula ')'
    NAME    :: [A-Za-z_][A-Za-z0-9_]*

Whitespace is insignificant, operators are explicit (no juxtaposition) and
there is no negation. Parentheses nest at most MAX_NESTING levels.
A chain `a & b & c` becomes one three-child gate; parentheses always open a
new node, so rendering (fully parenthesized) and re-parsing gives back the
same tree.
"""
import re

from .errors import FormulaSyntaxError
from .models.formula import And, Or, Var

TOKEN = re.compile(r'\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[&|()])|(?P<neg>[!~])|(?P<bad>\S))')

END = object()

# parenthesis levels accepted by the recursive-descent parser
MAX_NESTING = 100


def tokenize(text):
    """Yield (kind, value, line, column); kind is 'name', 'op' or END"""
    line_starts = [0] + [m.end() for m in re.finditer('\n', text)]

    def position(offset):
        line = 0
        while line + 1 < len(line_starts) and line_starts[line + 1] <= offset:
            line += 1
        return line + 1, offset - line_starts[line] + 1

    pos = 0
    while True:
        m = TOKEN.match(text, pos)
        if m is None:
            line, column = position(len(text))
            yield END, None, line, column
            return
        pos = m.end()
        kind = m.lastgroup
        line, column = position(m.start(kind))
        if kind == 'neg':
            raise FormulaSyntaxError('negation not allowed', line, column)
        if kind == 'bad':
            raise FormulaSyntaxError(f'unexpected character {m.group(kind)!r}', line, column)
        yield kind, m.group(kind), line, column


class _Parser:

    def __init__(self, text, registry):
        self.tokens = tokenize(text)
        self.registry = registry
        self.depth = 0
        self.advance()

    def advance(self):
        self.kind, self.value, self.line, self.column = next(self.tokens)

    def fail(self, expected):
        have = '<end of formula>' if self.kind is END else repr(self.value)
        raise FormulaSyntaxError(f'expected {expected}, have {have}', self.line, self.column)

    def accept(self, op):
        if self.kind == 'op' and self.value == op:
            self.advance()
            return True
        return False

    def parse_formula(self):
        return self.parse_or()

    def parse_or(self):
        children = [self.parse_and()]
        while self.accept('|'):
            children.append(self.parse_and())
        return children[0] if len(children) == 1 else Or(children)

    def parse_and(self):
        children = [self.parse_atom()]
        while self.accept('&'):
            children.append(self.parse_atom())
        return children[0] if len(children) == 1 else And(children)

    def parse_atom(self):
        if self.kind == 'name':
            variable = self.registry.intern(self.value)
            self.advance()
            return Var(variable)
        line, column = self.line, self.column
        if self.accept('('):
            self.depth += 1
            if self.depth > MAX_NESTING:
                raise FormulaSyntaxError(f'parentheses nested deeper than {MAX_NESTING} levels', line, column)
            node = self.parse_formula()
            if not self.accept(')'):
                self.fail("')'")
            self.depth -= 1
            return node
        self.fail("a variable or '('")

    def parse_all(self):
        if self.kind is END:
            raise FormulaSyntaxError('empty formula', self.line, self.column)
        node = self.parse_formula()
        if self.kind is not END:
            self.fail("'&', '|' or end of formula")
        return node


def parse_formula(text, registry):
    """Parse `text`, interning its variable names into `registry`"""
    return _Parser(text, registry).parse_all()


def render(formula):
    """Fully parenthesized text; constants render as 1/0 and do not re-parse"""
    return formula.render()
