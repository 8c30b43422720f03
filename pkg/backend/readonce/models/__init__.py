# Models package initialization
from .variable import Variable, VariableRegistry
from .varset import VarSet, Assignment, EMPTY
from .formula import (
    Formula, Var, And, Or, Constant, TRUE, FALSE,
    conjunction, disjunction, evaluate, restrict, max_occurrences, is_alternating,
)
from .terms import TermKind, TermList, ReadOnceVerdict
from .literal_cnf import Literal, LiteralCnf, SatResult
from .instance import ReadOnceCnf, ReadOnceDnf, Instance, Verdict, Step, RecognitionResult
from .graph import Graph, ConfEntry, ReductionOutput, outcome_name

__all__ = [
    'Variable', 'VariableRegistry', 'VarSet', 'Assignment', 'EMPTY',
    'Formula', 'Var', 'And', 'Or', 'Constant', 'TRUE', 'FALSE',
    'conjunction', 'disjunction', 'evaluate', 'restrict', 'max_occurrences', 'is_alternating',
    'TermKind', 'TermList', 'ReadOnceVerdict',
    'Literal', 'LiteralCnf', 'SatResult',
    'ReadOnceCnf', 'ReadOnceDnf', 'Instance', 'Verdict', 'Step', 'RecognitionResult',
    'Graph', 'ConfEntry', 'ReductionOutput', 'outcome_name',
]
