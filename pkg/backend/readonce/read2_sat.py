"""
Satisfiability for CNFs in which every variable occurs at most twice, and the
polynomial-time test of whether a read-once CNF implies a read-once DNF.

The solver is an elimination loop:
    1. unit propagation,
    2. pure literals (a variable seen in one sign only),
    3. resolution on a variable with one positive and one negative occurrence.
Every variable of a read-2 CNF falls under 2 or 3, each step removes a
variable without adding occurrences, and the loop ends with an empty clause
(unsatisfiable) or no clauses (satisfiable). Models are rebuilt by replaying
the eliminations backwards.
"""
import logging

from .errors import NotRead2Error
from .models.literal_cnf import Literal, LiteralCnf, SatResult
from .models.varset import Assignment, VarSet

logger = logging.getLogger(__name__)


def _simplify(clauses, var, value):
    """Clauses after fixing var := value"""
    result = []
    for clause in clauses:
        if Literal(var, value) in clause:
            continue
        result.append(clause - {Literal(var, not value)})
    return result


def _replay(trail, width):
    """Rebuild a model from the elimination trail; untouched variables are 0"""
    mask = 0
    for kind, var, data in reversed(trail):
        if kind == 'fix':
            if data:
                mask |= 1 << var
            continue

        # resolved: data = (clause with +var, clause with -var)
        positive, _ = data
        rest = positive - {Literal(var, True)}
        if not any(lit.satisfied_by(mask) for lit in rest):
            mask |= 1 << var
    return Assignment(mask, width)


def solve_read2(cnf):
    """Decide satisfiability of a read-2 LiteralCnf, with a model when satisfiable"""
    if not cnf.is_read2():
        raise NotRead2Error('not read-2: some variable occurs more than twice')

    clauses = list(cnf.clauses)
    trail = []

    while clauses:
        if any(not clause for clause in clauses):
            logger.debug('empty clause derived, %d eliminations', len(trail))
            return SatResult(False)

        unit = next((clause for clause in clauses if len(clause) == 1), None)
        if unit is not None:
            (lit,) = unit
            trail.append(('fix', lit.var, lit.positive))
            clauses = _simplify(clauses, lit.var, lit.positive)
            continue

        signs = {}
        for clause in clauses:
            for lit in clause:
                signs.setdefault(lit.var, []).append((lit.positive, clause))

        pure = next(
            (var for var in sorted(signs) if len({sign for sign, _ in signs[var]}) == 1),
            None,
        )
        if pure is not None:
            value = signs[pure][0][0]
            trail.append(('fix', pure, value))
            clauses = _simplify(clauses, pure, value)
            continue

        # every remaining variable now has exactly one occurrence of each sign
        var = min(signs)
        positive = next(c for sign, c in signs[var] if sign)
        negative = next(c for sign, c in signs[var] if not sign)
        resolvent = (positive - {Literal(var, True)}) | (negative - {Literal(var, False)})
        trail.append(('resolve', var, (positive, negative)))

        remaining = [c for c in clauses if c is not positive and c is not negative]
        if not any(-lit in resolvent for lit in resolvent):
            remaining.append(resolvent)
        clauses = remaining

    model = _replay(trail, cnf.width)
    if not cnf.is_satisfied_by(model):
        raise RuntimeError('read-2 model reconstruction produced a non-model')
    logger.debug('satisfiable after %d eliminations', len(trail))
    return SatResult(True, model)


def _width(cnf_sets, dnf_sets):
    mask = 0
    for s in list(cnf_sets) + list(dnf_sets):
        mask |= s.mask
    return max(mask.bit_length(), 1)


def encode_refutation(cnf, dnf, width=None):
    """
    C and not D as a signed CNF: C's clauses stay positive, each term of D
    becomes one all-negative clause. Read-2 whenever C and D are read-once.
    """
    if width is None:
        width = _width(cnf.clauses, dnf.terms)
    clauses = [[Literal(v, True) for v in clause] for clause in cnf.clauses]
    clauses += [[Literal(v, False) for v in term] for term in dnf.terms]
    return LiteralCnf(clauses, width)


def _least_selection(refutation, blocks, value):
    """
    Lexicographically least set picking one variable per block.

    Walks variables in ascending id; a candidate is kept when setting it to
    `value` and the rest of its block to the opposite value leaves the
    refutation satisfiable. `refutation` must be satisfiable on entry.
    """
    owner = {}
    for index, block in enumerate(blocks):
        for v in block:
            owner[v] = index

    chosen = VarSet()
    decided = set()
    for v in sorted(owner):
        block = owner[v]
        if block in decided:
            continue
        fixed = {w: (not value) for w in blocks[block]}
        fixed[v] = value
        trial = refutation.assign(fixed)
        if solve_read2(trial).satisfiable:
            refutation = trial
            chosen = chosen.add(v)
            decided.add(block)
        else:
            refutation = refutation.assign({v: not value})
    return chosen


def implies_tautology(cnf, dnf):
    """
    Whether C -> D is a tautology for a read-once CNF C and read-once DNF D.

    Returns (True, None) or (False, S0) where S0 is the lexicographically
    least inclusion-minimal set with C(S0 -> 1) = 1 and D(S0 -> 1) = 0: one
    variable from every clause, containing no term. Empty families follow
    the usual conventions (empty CNF is 1, empty DNF is 0, an empty clause
    is 0 and an empty term is 1).
    """
    refutation = encode_refutation(cnf, dnf)
    if not solve_read2(refutation).satisfiable:
        logger.debug('C -> D holds (m=%d, l=%d)', len(cnf.clauses), len(dnf.terms))
        return True, None

    witness = _least_selection(refutation, [c.ids() for c in cnf.clauses], True)
    logger.debug('C -> D fails, minimal counterexample %s', witness.ids())
    return False, witness


def minimal_zero_witness(cnf, dnf):
    """
    When C -> D is not a tautology: the least inclusion-minimal T with
    C(T -> 0) = 1 and D(T -> 0) = 0, i.e. one variable from every term and
    no clause inside T. None when C -> D is a tautology.
    """
    refutation = encode_refutation(cnf, dnf)
    if not solve_read2(refutation).satisfiable:
        return None
    return _least_selection(refutation, [t.ids() for t in dnf.terms], False)
