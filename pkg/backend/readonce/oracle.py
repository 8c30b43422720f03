"""
Exhaustive ground truth: truth tables, minterm/maxterm enumeration, the
minterm-maxterm intersection criterion for read-once functions, and
brute-force implication checks.

Everything here scans all 2^n assignments of the formula's own variables, so
it is guarded by a variable limit.
"""
import logging

import numpy as np

from .errors import VariableLimitExceeded
from .models.formula import And, Constant, Or, Var, iter_nodes
from .models.terms import ReadOnceVerdict, TermKind, TermList
from .models.varset import Assignment, VarSet

logger = logging.getLogger(__name__)

DEFAULT_MAX_VARS = 24

_POPCOUNT8 = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint8)


def _popcount(values):
    """Per-element popcount of a non-negative int64 array"""
    values = np.ascontiguousarray(values, dtype=np.int64)
    return _POPCOUNT8[values.view(np.uint8)].reshape(-1, 8).sum(axis=1)


def _check_limit(count, max_vars):
    if max_vars is not None and count > max_vars:
        raise VariableLimitExceeded(count, max_vars)


def truth_table(formula, variables):
    """
    Boolean vector of length 2^len(variables).

    Entry x is the value of `formula` when variable variables[i] takes bit i
    of x. Variables of the formula missing from `variables` read as 0.
    """
    position = {v: i for i, v in enumerate(variables)}
    index = np.arange(1 << len(variables), dtype=np.int64)
    return _table(formula, position, index)


def _table(node, position, index):
    if isinstance(node, Var):
        bit = position.get(node.variable.id)
        if bit is None:
            return np.zeros(len(index), dtype=bool)
        return (index >> bit) & 1 == 1
    if isinstance(node, Constant):
        return np.full(len(index), node.value, dtype=bool)

    combine = np.logical_and if isinstance(node, And) else np.logical_or
    result = _table(node.children[0], position, index)
    for child in node.children[1:]:
        combine(result, _table(child, position, index), out=result)
    return result


def _minimal_points(table, n):
    """Local masks x with table[x] true and table false on every x minus one bit"""
    index = np.arange(len(table), dtype=np.int64)
    minimal = table.copy()
    for i in range(n):
        bit = 1 << i
        minimal &= ~(((index & bit) != 0) & table[index ^ bit])
    return np.flatnonzero(minimal)


def _sorted_local(masks, n):
    """Ascending by popcount, then lexicographically by member names (local bits follow name order)"""
    def key(mask):
        return (bin(mask).count('1'), [i for i in range(n) if mask >> i & 1])
    return sorted((int(m) for m in masks), key=key)


def _to_global(local, variables):
    mask = 0
    for i, v in enumerate(variables):
        if local >> i & 1:
            mask |= 1 << v
    return VarSet(mask)


def _variables_by_name(formula):
    """Variable ids of the formula, ordered by variable name"""
    names = {node.variable.id: node.variable.name for node in iter_nodes(formula) if isinstance(node, Var)}
    return sorted(names, key=names.get)


def _local_terms(formula, kind, max_vars):
    variables = _variables_by_name(formula)
    n = len(variables)
    _check_limit(n, max_vars)

    table = truth_table(formula, variables)
    if kind is TermKind.MAXTERM:
        # g[T] = not f(T -> 0); the index of "T to 0, rest to 1" is full ^ T
        table = ~table[::-1]
    local = _sorted_local(_minimal_points(table, n), n)
    logger.debug('%d %ss over %d variables', len(local), kind.value, n)
    return variables, local


def enumerate_terms(formula, kind, max_vars=DEFAULT_MAX_VARS):
    """All minterms (minimal 1-certificates) or maxterms (minimal 0-certificates)"""
    variables, local = _local_terms(formula, kind, max_vars)
    return TermList(kind, tuple(_to_global(m, variables) for m in local))


def is_read_once_oracle(formula, max_vars=DEFAULT_MAX_VARS):
    """
    Read-once iff every minterm meets every maxterm in exactly one variable.

    On failure the witness is the first (minterm, maxterm) pair, minterms in
    outer order and maxterms in inner order, both in enumeration order.
    """
    variables, minterms = _local_terms(formula, TermKind.MINTERM, max_vars)
    _, maxterms = _local_terms(formula, TermKind.MAXTERM, max_vars)
    if not minterms or not maxterms:
        return ReadOnceVerdict(True)

    maxterm_array = np.array(maxterms, dtype=np.int64)
    for minterm in minterms:
        counts = _popcount(maxterm_array & minterm)
        bad = np.flatnonzero(counts != 1)
        if len(bad):
            maxterm = maxterms[bad[0]]
            logger.debug('criterion fails: |S & T| = %d', counts[bad[0]])
            return ReadOnceVerdict(
                False, (_to_global(minterm, variables), _to_global(maxterm, variables))
            )
    return ReadOnceVerdict(True)


def brute_counterexample(p, q, max_vars=DEFAULT_MAX_VARS, width=None):
    """First assignment (ascending local index) with p = 1 and q = 0, or None"""
    variables = (p.variables() | q.variables()).ids()
    _check_limit(len(variables), max_vars)

    falsified = np.flatnonzero(truth_table(p, variables) & ~truth_table(q, variables))
    if not len(falsified):
        return None
    if width is None:
        width = 1 + max(variables, default=-1)
    return Assignment(_to_global(int(falsified[0]), variables).mask, width)


def brute_tautology(p, q, max_vars=DEFAULT_MAX_VARS):
    """True iff p -> q holds under every assignment"""
    return brute_counterexample(p, q, max_vars) is None


def _support_mask(formula):
    return formula.variables().mask


def is_minterm(formula, varset):
    """f(S -> 1) = 1 and f((S minus v) -> 1) = 0 for each v in S"""
    if not formula.evaluate(varset.mask):
        return False
    return not any(formula.evaluate(varset.mask & ~(1 << v)) for v in varset)


def is_maxterm(formula, varset):
    """f(T -> 0) = 0 and f((T minus v) -> 0) = 1 for each v in T"""
    ones = _support_mask(formula) & ~varset.mask
    if formula.evaluate(ones):
        return False
    return all(formula.evaluate(ones | 1 << v) for v in varset)


def certify_witness(formula, minterm, maxterm):
    """A certificate of non-read-onceness, checked by direct evaluation only"""
    return (
        len(minterm & maxterm) >= 2
        and is_minterm(formula, minterm)
        and is_maxterm(formula, maxterm)
    )
