"""
Polynomial-time recognition of read-once functions given as C v D, with C a
read-once monotone CNF, D a read-once monotone DNF and every variable of C
occurring in D.

Minterms of C v D are "left" (one variable from every clause, containing no
term) or "right" (a term containing no left set properly). The pipeline
looks for a minterm and a maxterm sharing two variables in four stages:

    1. C -> D is a tautology: the function is D, read-once.
    2. some maxterm holds two clauses: it meets the minimal counterexample
       of stage 1 twice.
    3. some right minterm holds two variables of a clause C_u that lies
       inside some maxterm.
    4. some left minterm holds q in C_u and p in a term disjoint from C_u,
       and some maxterm holds C_u and p.

If none fires, the function is read-once. Loops run in ascending index order,
so the reported witness is deterministic.
"""
import logging
from itertools import combinations

from .errors import PreconditionError, ValidationError
from .models.instance import (
    Instance, ReadOnceCnf, ReadOnceDnf, RecognitionResult, Step, Verdict,
)
from .models.varset import VarSet
from .read2_sat import implies_tautology, minimal_zero_witness

logger = logging.getLogger(__name__)


def validate(clauses, terms, registry, variables=None, cover=True):
    """
    Build an Instance from raw families (iterables of names, ids or Variables).

    C's names are interned before D's, so ids follow C-then-D reading order.
    `variables`, when given, is the declared variable set of the instance
    (a VarSet); D has to cover all of it.
    With cover=False only the read-once shape of C and D is checked, which is
    all the tautology test needs.
    """
    def as_sets(families, label):
        sets = []
        for number, family in enumerate(families, start=1):
            members = [registry.intern(x) if isinstance(x, str) else x for x in family]
            if not members:
                raise ValidationError(f'empty clause/term: {label} {number} is empty')
            sets.append(VarSet.of(members))
        return sets

    cnf_sets = as_sets(clauses, 'clause')
    dnf_sets = as_sets(terms, 'term')
    if not cnf_sets:
        raise ValidationError('empty clause/term: C has no clauses')
    if not dnf_sets:
        raise ValidationError('empty clause/term: D has no terms')

    if not _pairwise_disjoint(cnf_sets):
        raise ValidationError('clauses not disjoint')
    if not _pairwise_disjoint(dnf_sets):
        raise ValidationError('terms not disjoint')

    cnf = ReadOnceCnf(cnf_sets)
    dnf = ReadOnceDnf(dnf_sets)
    missing = cnf.variables() - dnf.variables()
    if cover and missing:
        raise ValidationError(
            f'variable of C missing from D: {", ".join(missing.names(registry))}'
        )
    if variables is not None:
        uncovered = variables - dnf.variables()
        if uncovered:
            raise ValidationError(
                f'D does not cover all variables: {", ".join(uncovered.names(registry))}'
            )
    return Instance(cnf, dnf, registry)


def _pairwise_disjoint(sets):
    seen = 0
    for s in sets:
        if seen & s.mask:
            return False
        seen |= s.mask
    return True


def _clause_union(inst):
    return inst.cnf.variables()


def is_left_set(inst, varset):
    """S lies inside the clauses and meets each clause in exactly one variable"""
    if not varset <= _clause_union(inst):
        return False
    return all(len(varset & clause) == 1 for clause in inst.clauses)


def is_left_minterm(inst, varset):
    """A left set containing no term (no right set can sit properly inside it)"""
    return is_left_set(inst, varset) and not any(term <= varset for term in inst.terms)


def _contains_left_set_properly(inst, term):
    # a left set inside D_j exists iff D_j meets every clause; it is proper
    # unless D_j is itself a left set
    if not all(term.mask & clause.mask for clause in inst.clauses):
        return False
    return not is_left_set(inst, term)


def right_minterms(inst):
    """Indices j (ascending) for which D_j is a minterm of C v D"""
    return [
        j for j, term in enumerate(inst.terms)
        if not _contains_left_set_properly(inst, term)
    ]


def maxterm_with_two_clauses(inst, u, v):
    """
    A maxterm containing C_u and C_v, or None.

    One exists iff no term meets C_u | C_v twice; it is C_u | C_v plus the
    lowest-id variable of every term missing C_u | C_v.
    """
    if u == v:
        raise PreconditionError('clause indices must be distinct')

    base = inst.clauses[u] | inst.clauses[v]
    if any(len(base & term) > 1 for term in inst.terms):
        return None

    maxterm = base
    for term in inst.terms:
        if term.isdisjoint(base):
            maxterm = maxterm.add(term.ids()[0])
    return maxterm


def _family_union(sets):
    mask = 0
    for s in sets:
        mask |= s.mask
    return VarSet(mask)


def maxterm_with_clause(inst, i):
    """
    A maxterm containing C_i, or None.

    Valid once C -> D is known not to be a tautology and no maxterm holds two
    clauses. Terms meeting C_i are covered by C_i itself; the remaining
    terms form D^ and the clauses avoiding every term that meets C_i form
    C^. A maxterm exists iff C^ -> D^ is not a tautology, and then it is
    C_i plus the minimal zero witness of C^ -> D^.
    """
    clause = inst.clauses[i]
    touching = [j for j, term in enumerate(inst.terms) if not term.isdisjoint(clause)]
    covered = _family_union(inst.terms[j] for j in touching)

    aux_cnf = ReadOnceCnf(
        c for w, c in enumerate(inst.clauses) if w != i and c.isdisjoint(covered)
    )
    aux_dnf = ReadOnceDnf(t for j, t in enumerate(inst.terms) if j not in touching)

    rest = minimal_zero_witness(aux_cnf, aux_dnf)
    logger.debug('clause %d: C^ has %d clauses, D^ has %d terms, witness %s',
                 i, len(aux_cnf), len(aux_dnf), rest)
    if rest is None:
        return None
    return rest | clause


def left_minterm_with_pair(inst, a, b):
    """
    A left minterm containing variables a and b (ids or Variables), or None.

    Setting a and b to 1 erases the clauses they lie in and shortens the
    terms holding them; a left minterm through a and b exists iff the
    remaining C^ -> D^ is not a tautology.
    """
    a, b = getattr(a, 'id', a), getattr(b, 'id', b)
    if a == b:
        raise PreconditionError('variables must be distinct')

    pair = VarSet.of([a, b])
    if not pair <= _clause_union(inst):
        return None
    if any(pair <= clause for clause in inst.clauses):
        return None

    aux_cnf = ReadOnceCnf(c for c in inst.clauses if c.isdisjoint(pair))
    aux_dnf = ReadOnceDnf(t - pair for t in inst.terms)

    holds, rest = implies_tautology(aux_cnf, aux_dnf)
    if holds:
        return None
    return rest | pair


def maxterm_with_clause_plus(inst, u, p):
    """
    A maxterm containing C_u and variable p, or None.

    p must sit in a term D_v disjoint from C_u. Valid once no maxterm holds
    two clauses. D_v is covered by p and the terms meeting C_u by C_u; the
    clauses avoiding (D_v minus p) and those terms, each with p deleted, form
    C^, and the untouched terms form D^.
    """
    p = getattr(p, 'id', p)
    clause = inst.clauses[u]
    if p in clause:
        raise PreconditionError('p must not belong to C_u')
    v = inst.dnf.term_of(p)
    if v is None:
        raise PreconditionError('p must belong to a term of D')
    if not inst.terms[v].isdisjoint(clause):
        raise PreconditionError('the term holding p must be disjoint from C_u')

    touching = [v] + [
        j for j, term in enumerate(inst.terms) if j != v and not term.isdisjoint(clause)
    ]
    covered = inst.terms[v].discard(p) | _family_union(
        inst.terms[j] for j in touching[1:]
    )

    aux_cnf = ReadOnceCnf(
        c.discard(p) for w, c in enumerate(inst.clauses)
        if w != u and c.isdisjoint(covered)
    )
    aux_dnf = ReadOnceDnf(t for j, t in enumerate(inst.terms) if j not in touching)

    rest = minimal_zero_witness(aux_cnf, aux_dnf)
    if rest is None:
        return None
    return rest | clause.add(p)


def recognize(inst):
    """Decide whether C v D computes a read-once function"""
    holds, left = implies_tautology(inst.cnf, inst.dnf)
    if holds:
        logger.debug('step 1: C -> D is a tautology')
        return RecognitionResult(Verdict.READ_ONCE, Step.TAUTOLOGY)

    m = len(inst.clauses)
    for u, v in combinations(range(m), 2):
        maxterm = maxterm_with_two_clauses(inst, u, v)
        if maxterm is not None:
            logger.debug('step 2: clauses %d and %d share a maxterm', u, v)
            return RecognitionResult(Verdict.NOT_READ_ONCE, Step.TWO_CLAUSES, left, maxterm)

    right = [inst.terms[j] for j in right_minterms(inst)]
    clause_maxterms = {}

    def clause_maxterm(u):
        if u not in clause_maxterms:
            clause_maxterms[u] = maxterm_with_clause(inst, u)
        return clause_maxterms[u]

    for u, clause in enumerate(inst.clauses):
        for p, q in combinations(clause.ids(), 2):
            pair = VarSet.of([p, q])
            minterm = next((term for term in right if pair <= term), None)
            if minterm is None:
                continue
            maxterm = clause_maxterm(u)
            if maxterm is not None:
                logger.debug('step 3: clause %d, pair (%d, %d)', u, p, q)
                return RecognitionResult(Verdict.NOT_READ_ONCE, Step.RIGHT_PAIR, minterm, maxterm)

    for u, clause in enumerate(inst.clauses):
        for v, term in enumerate(inst.terms):
            if not term.isdisjoint(clause):
                continue
            for q in clause.ids():
                for p in term.ids():
                    minterm = left_minterm_with_pair(inst, p, q)
                    if minterm is None:
                        continue
                    maxterm = maxterm_with_clause_plus(inst, u, p)
                    if maxterm is not None:
                        logger.debug('step 4: clause %d, term %d, p=%d, q=%d', u, v, p, q)
                        return RecognitionResult(
                            Verdict.NOT_READ_ONCE, Step.LEFT_PAIR, minterm, maxterm
                        )

    logger.debug('no witness found, read-once')
    return RecognitionResult(Verdict.READ_ONCE, Step.FINAL)
