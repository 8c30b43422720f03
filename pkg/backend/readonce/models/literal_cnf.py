"""
Signed-literal CNF used by the read-2 satisfiability engine
"""
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .varset import Assignment


class Literal(NamedTuple):
    var: int
    positive: bool = True

    def __neg__(self):
        return Literal(self.var, not self.positive)

    def satisfied_by(self, mask):
        return bool(mask >> self.var & 1) == self.positive

    def __repr__(self):
        return f'{"" if self.positive else "~"}v{self.var}'


def _is_tautological(clause):
    return any(-literal in clause for literal in clause)


class LiteralCnf:
    """
    A CNF over signed literals.

    Clauses are frozensets; a clause holding a variable in both signs is a
    tautology and is dropped on construction. An empty clause is kept and
    makes the formula unsatisfiable. `width` is the registry size used for
    models.
    """

    def __init__(self, clauses, width=None):
        kept = []
        for clause in clauses:
            clause = frozenset(Literal(*lit) for lit in clause)
            if not _is_tautological(clause):
                kept.append(clause)
        self.clauses = tuple(kept)
        if width is None:
            width = 1 + max((lit.var for c in kept for lit in c), default=-1)
        self.width = width

    def occurrences(self):
        """Counter of variable id -> number of literal positions"""
        return Counter(lit.var for clause in self.clauses for lit in clause)

    def is_read2(self):
        return all(count <= 2 for count in self.occurrences().values())

    def variables(self):
        return sorted(self.occurrences())

    def is_satisfied_by(self, mask):
        mask = getattr(mask, 'mask', mask)
        return all(any(lit.satisfied_by(mask) for lit in clause) for clause in self.clauses)

    def assign(self, values):
        """Substitute {var id: bit}; satisfied clauses vanish, falsified literals drop out"""
        values = {getattr(key, 'id', key): bool(bit) for key, bit in values.items()}
        clauses = []
        for clause in self.clauses:
            remaining = []
            satisfied = False
            for lit in clause:
                if lit.var in values:
                    if values[lit.var] == lit.positive:
                        satisfied = True
                        break
                else:
                    remaining.append(lit)
            if not satisfied:
                clauses.append(remaining)
        return LiteralCnf(clauses, self.width)

    def __len__(self):
        return len(self.clauses)

    def to_dict(self):
        return {
            'width': self.width,
            'clauses': [sorted((lit.var, lit.positive) for lit in clause) for clause in self.clauses],
        }

    def __repr__(self):
        body = ' & '.join('(' + ' | '.join(map(repr, sorted(c))) + ')' for c in self.clauses)
        return f'<LiteralCnf {body or "true"}>'


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    model: Optional[Assignment] = None

    def to_dict(self):
        return {
            'satisfiable': self.satisfiable,
            'model': self.model.to_dict() if self.model else None,
        }
