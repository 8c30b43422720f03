"""
Recognizer input (C, D) and its result
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .formula import Var, conjunction, disjunction
from .varset import VarSet


@dataclass(frozen=True)
class ReadOnceCnf:
    """Clauses C_1..C_m as disjoint variable sets (not validated here)"""
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, 'clauses', tuple(self.clauses))

    def variables(self):
        mask = 0
        for clause in self.clauses:
            mask |= clause.mask
        return VarSet(mask)

    def evaluate(self, mask):
        """AND over clauses of OR over members; the empty CNF is 1"""
        mask = getattr(mask, 'mask', mask)
        return all(clause.mask & mask for clause in self.clauses)

    def to_formula(self, registry):
        return conjunction(
            disjunction(Var(registry[v]) for v in clause) for clause in self.clauses
        )

    def to_dict(self, registry=None):
        return {'clauses': [c.names(registry) if registry else c.ids() for c in self.clauses]}

    def __len__(self):
        return len(self.clauses)

    def __repr__(self):
        return f'<ReadOnceCnf {[c.ids() for c in self.clauses]}>'


@dataclass(frozen=True)
class ReadOnceDnf:
    """Terms D_1..D_l as disjoint variable sets (not validated here)"""
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))

    def variables(self):
        mask = 0
        for term in self.terms:
            mask |= term.mask
        return VarSet(mask)

    def evaluate(self, mask):
        """OR over terms of AND over members; the empty DNF is 0"""
        mask = getattr(mask, 'mask', mask)
        return any(term.mask & mask == term.mask for term in self.terms)

    def term_of(self, variable):
        """Index of the term holding `variable`, or None"""
        for index, term in enumerate(self.terms):
            if variable in term:
                return index
        return None

    def to_formula(self, registry):
        return disjunction(
            conjunction(Var(registry[v]) for v in term) for term in self.terms
        )

    def to_dict(self, registry=None):
        return {'terms': [t.names(registry) if registry else t.ids() for t in self.terms]}

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f'<ReadOnceDnf {[t.ids() for t in self.terms]}>'


@dataclass(frozen=True)
class Instance:
    cnf: ReadOnceCnf
    dnf: ReadOnceDnf
    registry: object

    @property
    def clauses(self):
        return self.cnf.clauses

    @property
    def terms(self):
        return self.dnf.terms

    def variables(self):
        return self.dnf.variables()

    def to_formula(self):
        """C v D as one monotone formula"""
        return disjunction([self.cnf.to_formula(self.registry), self.dnf.to_formula(self.registry)])

    def to_dict(self):
        return {
            'cnf': self.cnf.to_dict(self.registry)['clauses'],
            'dnf': self.dnf.to_dict(self.registry)['terms'],
            'n_vars': len(self.variables()),
        }

    def __repr__(self):
        return f'<Instance m={len(self.cnf)} l={len(self.dnf)} n={len(self.variables())}>'


class Verdict(Enum):
    READ_ONCE = 'READ_ONCE'
    NOT_READ_ONCE = 'NOT_READ_ONCE'


class Step(Enum):
    """Pipeline stage that decided the verdict"""
    TAUTOLOGY = 1
    TWO_CLAUSES = 2
    RIGHT_PAIR = 3
    LEFT_PAIR = 4
    FINAL = 'FINAL'


@dataclass(frozen=True)
class RecognitionResult:
    verdict: Verdict
    step: Step
    minterm: Optional[VarSet] = None
    maxterm: Optional[VarSet] = None

    def __post_init__(self):
        negative = self.verdict is Verdict.NOT_READ_ONCE
        has_witness = self.minterm is not None and self.maxterm is not None
        if negative != has_witness:
            raise ValueError('NOT_READ_ONCE results carry a witness, READ_ONCE results do not')

    @property
    def read_once(self):
        return self.verdict is Verdict.READ_ONCE

    @property
    def witness(self):
        return None if self.read_once else (self.minterm, self.maxterm)

    def to_dict(self, registry=None):
        """Schema-stable report: verdict, step, minterm, maxterm (sorted names)"""
        def names(varset):
            if varset is None:
                return None
            return varset.names(registry) if registry else varset.ids()

        return {
            'verdict': self.verdict.value,
            'step': self.step.value,
            'minterm': names(self.minterm),
            'maxterm': names(self.maxterm),
        }

    def __repr__(self):
        return f'<RecognitionResult {self.verdict.value} step={self.step.value}>'
