"""
Monotone formula AST: variables, AND/OR gates and the constants produced by restriction
"""
from collections import Counter
from dataclasses import dataclass

from .varset import VarSet


class Formula:
    """Base class of immutable AST nodes"""

    def evaluate(self, mask):
        """Value under the assignment bitmask `mask`"""
        raise NotImplementedError

    def variables(self):
        return VarSet(self._variable_mask())

    def occurrences(self):
        """Counter of variable id -> number of leaves carrying it"""
        counts = Counter()
        self._count(counts)
        return counts

    def depth(self):
        """Gate depth; a variable or constant has depth 0"""
        return 0

    def render(self):
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True, eq=True)
class Var(Formula):
    variable: object

    def evaluate(self, mask):
        return bool(mask >> self.variable.id & 1)

    def _variable_mask(self):
        return 1 << self.variable.id

    def _count(self, counts):
        counts[self.variable.id] += 1

    def render(self):
        return self.variable.name

    def to_dict(self):
        return {'type': 'var', 'name': self.variable.name}

    def __repr__(self):
        return f'Var({self.variable.name})'


@dataclass(frozen=True, eq=True)
class Constant(Formula):
    value: bool

    def evaluate(self, mask):
        return self.value

    def _variable_mask(self):
        return 0

    def _count(self, counts):
        pass

    def render(self):
        return '1' if self.value else '0'

    def to_dict(self):
        return {'type': 'const', 'value': int(self.value)}

    def __repr__(self):
        return f'Constant({int(self.value)})'


TRUE = Constant(True)
FALSE = Constant(False)


class _Gate(Formula):
    symbol = None
    kind = None

    def __init__(self, children):
        children = tuple(children)
        if len(children) < 2:
            raise ValueError(f'{self.kind} gate needs at least two children')
        object.__setattr__(self, 'children', children)

    def __setattr__(self, name, value):
        raise AttributeError('formula nodes are immutable')

    def __eq__(self, other):
        return type(self) is type(other) and self.children == other.children

    def __hash__(self):
        return hash((self.kind, self.children))

    def _variable_mask(self):
        mask = 0
        for child in self.children:
            mask |= child._variable_mask()
        return mask

    def _count(self, counts):
        for child in self.children:
            child._count(counts)

    def depth(self):
        return 1 + max(child.depth() for child in self.children)

    def render(self):
        return '(' + f' {self.symbol} '.join(child.render() for child in self.children) + ')'

    def to_dict(self):
        return {'type': self.kind, 'children': [child.to_dict() for child in self.children]}

    def __repr__(self):
        return f'{type(self).__name__}({", ".join(map(repr, self.children))})'


class And(_Gate):
    symbol = '&'
    kind = 'and'

    def evaluate(self, mask):
        return all(child.evaluate(mask) for child in self.children)


class Or(_Gate):
    symbol = '|'
    kind = 'or'

    def evaluate(self, mask):
        return any(child.evaluate(mask) for child in self.children)


def evaluate(formula, assignment):
    """Evaluate under an Assignment (or a raw bitmask)"""
    return int(formula.evaluate(getattr(assignment, 'mask', assignment)))


def _combine(gate, absorbing, identity, parts):
    children = []
    for part in parts:
        if isinstance(part, Constant):
            if part.value == absorbing:
                return Constant(absorbing)
            continue
        if isinstance(part, gate):
            children.extend(part.children)
        else:
            children.append(part)

    if not children:
        return Constant(identity)
    if len(children) == 1:
        return children[0]
    return gate(children)


def conjunction(parts):
    """AND of `parts`, flattening nested ANDs; empty input is the constant 1"""
    return _combine(And, False, True, parts)


def disjunction(parts):
    """OR of `parts`, flattening nested ORs; empty input is the constant 0"""
    return _combine(Or, True, False, parts)


def restrict(formula, fixed):
    """
    Substitute the bits in `fixed` ({Variable or id: bit}) and simplify.

    Constant subtrees are folded away; a fully determined formula comes back
    as TRUE or FALSE. Surviving gates keep their shape (no flattening), so a
    partial substitution of a read-once formula stays read-once.
    """
    values = {getattr(key, 'id', key): bool(bit) for key, bit in fixed.items()}
    return _restrict(formula, values)


def _restrict(node, values):
    if isinstance(node, Var):
        if node.variable.id in values:
            return TRUE if values[node.variable.id] else FALSE
        return node
    if isinstance(node, Constant):
        return node

    absorbing = isinstance(node, Or)
    children = []
    for child in node.children:
        reduced = _restrict(child, values)
        if isinstance(reduced, Constant):
            if reduced.value == absorbing:
                return Constant(absorbing)
            continue
        children.append(reduced)

    if not children:
        return Constant(not absorbing)
    if len(children) == 1:
        return children[0]
    return type(node)(children)


def max_occurrences(formula):
    """Syntactic readability: the largest number of leaves sharing a variable"""
    counts = formula.occurrences()
    return max(counts.values()) if counts else 0


def is_alternating(formula):
    """True when no AND has an AND child and no OR has an OR child"""
    if not isinstance(formula, _Gate):
        return True
    return all(
        type(child) is not type(formula) and is_alternating(child)
        for child in formula.children
    )


def iter_nodes(formula):
    """Pre-order traversal"""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, _Gate):
            stack.extend(reversed(node.children))
