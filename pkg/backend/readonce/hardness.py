"""
Generators of hard instances.

build_reduction turns a graph G and an integer k into a pair (Psi, D_n)
such that G has a k-clique iff Psi -> D_n is NOT a tautology. The encoding
follows a cooperative game: Merlin points to a cell i, Alice writes a vertex
u there, Merlin writes a vertex v not adjacent to u in another cell j, and
Bob, seeing only the two filled cells, must name the cell touched first.
Each outcome (i, u) -> (j, v) is a variable x_i_u_j_v; D_n pairs the two
outcomes that look the same to Bob and

    Psi = AND over cells i  OR over vertices u  AND over replies (j, v)  x_i_u_j_v

says Alice survives every Merlin move. corollary_wrapper then turns the
implication question into a read-once question about one read-2 formula.
"""
import logging
from itertools import product

import networkx as nx

from .errors import ReductionError
from .models.formula import And, Var, conjunction, disjunction, is_alternating, max_occurrences
from .models.graph import ConfEntry, ReductionOutput, outcome_name
from .models.instance import ReadOnceDnf
from .models.variable import VariableRegistry
from .models.varset import Assignment, VarSet

logger = logging.getLogger(__name__)

WRAPPER_NAMES = ('w1', 'w2', 'w3', 'w4')


def _check_parameters(graph, k):
    if k < 2:
        raise ReductionError('k < 2: the game needs two distinct cells')
    if graph.n < 1:
        raise ReductionError('graph needs at least one vertex')


def _replies(graph, k, i, u):
    """Merlin's legal replies (j, v) after Alice wrote u in cell i"""
    return [
        (j, v)
        for j in range(1, k + 1) if j != i
        for v in graph.vertices if v == u or not graph.adjacent(u, v)
    ]


def build_conf(graph, k):
    """All end configurations, sorted by (smaller cell, its vertex, larger cell, its vertex)"""
    _check_parameters(graph, k)
    return [
        ConfEntry(i, u, j, v)
        for i in range(1, k + 1)
        for u in graph.vertices
        for j in range(i + 1, k + 1)
        for v in graph.vertices
        if u == v or not graph.adjacent(u, v)
    ]


def build_reduction(graph, k, registry=None):
    """Psi and D_n for (G, k); variables are interned in configuration order"""
    conf = build_conf(graph, k)
    registry = registry if registry is not None else VariableRegistry()

    terms = []
    for entry in conf:
        first, second = entry.outcomes()
        terms.append(VarSet.of([
            registry.intern(outcome_name(*first)),
            registry.intern(outcome_name(*second)),
        ]))
    dn = ReadOnceDnf(terms)

    # an empty reply list would make its AND the constant 1 (Alice wins
    # outright); with u always non-adjacent to itself it cannot happen for k >= 2
    psi = conjunction(
        disjunction(
            conjunction(Var(registry[outcome_name(i, u, j, v)]) for j, v in _replies(graph, k, i, u))
            for u in graph.vertices
        )
        for i in range(1, k + 1)
    )

    logger.debug('reduction k=%d: |CONF|=%d, %d variables', k, len(conf), 2 * len(conf))
    return ReductionOutput(graph, k, tuple(conf), psi, dn, registry)


def is_and_or_and(formula):
    """Read-once, AND at the top, alternating gates, depth at most 3"""
    return (
        isinstance(formula, And)
        and formula.depth() <= 3
        and is_alternating(formula)
        and max_occurrences(formula) == 1
    )


def _dnf_formula(dn, registry):
    return dn.to_formula(registry) if isinstance(dn, ReadOnceDnf) else dn


def corollary_wrapper(psi, dn, registry):
    """
    (Psi & (w1 w3 | w2 w4)) & (D | w1 w2 | w3 w4) over four fresh variables.

    Read-once as a function iff Psi -> D is a tautology.
    """
    taken = [name for name in WRAPPER_NAMES if name in registry]
    if taken:
        raise ReductionError(f'w-variables collide with instance variables: {", ".join(taken)}')

    w1, w2, w3, w4 = (Var(registry.intern(name)) for name in WRAPPER_NAMES)
    return conjunction([
        psi,
        disjunction([And([w1, w3]), And([w2, w4])]),
        disjunction([_dnf_formula(dn, registry), And([w1, w2]), And([w3, w4])]),
    ])


def lemma8_gadget(registry=None):
    """w2w3w4 | w1w3w4 | w1w2w4 | w1w2w3: every 3 of 4, not read-once"""
    registry = registry if registry is not None else VariableRegistry()
    w = [Var(registry.intern(name)) for name in WRAPPER_NAMES]
    return disjunction(
        And([w[x] for x in range(4) if x != skipped]) for skipped in range(4)
    )


def wrapper_core(registry):
    """(w1w3 | w2w4) & (w1w2 | w3w4): what the wrapper becomes at a point with Psi = 1, D = 0"""
    w1, w2, w3, w4 = (Var(registry.intern(name)) for name in WRAPPER_NAMES)
    return And([
        disjunction([And([w1, w3]), And([w2, w4])]),
        disjunction([And([w1, w2]), And([w3, w4])]),
    ])


def has_clique(graph, k):
    """Whether G has k pairwise adjacent vertices"""
    if k <= 0:
        return True
    if k == 1:
        return graph.n >= 1
    return any(len(clique) >= k for clique in nx.find_cliques(graph.to_networkx()))


def _alice_set(reduction, i, u):
    """Outcome variables that must be 1 for Alice to survive after writing u in cell i"""
    return VarSet.of(
        reduction.outcome(i, u, j, v) for j, v in _replies(reduction.graph, reduction.k, i, u)
    )


def strategy_point(reduction, strategy):
    """The point where exactly the outcomes of Alice's strategy (vertex per cell) are 1"""
    mask = 0
    for i, u in enumerate(strategy, start=1):
        mask |= _alice_set(reduction, i, u).mask
    return Assignment(mask, len(reduction.registry))


def clique_point(reduction, clique):
    """
    A point with Psi = 1 and D_n = 0 built from a k-clique (vertex for each cell).
    """
    clique = list(clique)
    if len(clique) != reduction.k or len(set(clique)) != reduction.k:
        raise ReductionError(f'need {reduction.k} distinct vertices')
    for x in range(len(clique)):
        for y in range(x + 1, len(clique)):
            if not reduction.graph.adjacent(clique[x], clique[y]):
                raise ReductionError(f'vertices {clique[x]} and {clique[y]} are not adjacent')
    return strategy_point(reduction, clique)


def decode_clique(reduction, assignment):
    """
    Read a k-clique off a point with Psi = 1 and D_n = 0: in each cell, the
    first vertex whose reply conjunction is all ones.
    """
    if not reduction.psi.evaluate(assignment.mask) or reduction.dn.evaluate(assignment.mask):
        raise ReductionError('point must satisfy Psi and falsify D_n')

    clique = []
    for i in range(1, reduction.k + 1):
        clique.append(next(
            u for u in reduction.graph.vertices
            if _alice_set(reduction, i, u) <= assignment.ones()
        ))
    return clique


def winning_strategy(reduction):
    """
    An Alice strategy (vertex per cell) whose outcome set contains no D_n
    term, or None. Such a strategy exists iff Psi -> D_n is not a tautology.
    """
    cells = [
        [(u, _alice_set(reduction, i, u)) for u in reduction.graph.vertices]
        for i in range(1, reduction.k + 1)
    ]
    for choice in product(*cells):
        ones = VarSet()
        for _, outcome_set in choice:
            ones = ones | outcome_set
        if not reduction.dn.evaluate(ones.mask):
            return [u for u, _ in choice]
    return None


def chain_dnf(registry, n):
    """D_n = x1 y1 | ... | xn yn"""
    return ReadOnceDnf(
        VarSet.of([registry.intern(f'x{i}'), registry.intern(f'y{i}')]) for i in range(1, n + 1)
    )
