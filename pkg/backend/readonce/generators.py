"""
Seeded random corpora and exhaustive small families
"""
from itertools import combinations, product

from .models.graph import Graph
from .models.literal_cnf import Literal, LiteralCnf
from .models.variable import VariableRegistry
from .recognizer import validate

CHAIN_NAMES = ('x1', 'y1', 'x2', 'y2', 'x3', 'y3', 'x4', 'y4')


def _split(items, parts, rng):
    """Cut a list into `parts` non-empty consecutive blocks at random points"""
    cuts = sorted(rng.sample(range(1, len(items)), parts - 1))
    bounds = [0] + cuts + [len(items)]
    return [items[a:b] for a, b in zip(bounds, bounds[1:])]


def random_families(rng, max_vars=12, max_clauses=4, max_terms=5):
    """
    Random (clauses, terms) name lists forming a valid instance: D partitions
    the variables, C is a family of disjoint clauses over a subset of them.
    """
    n = rng.randint(1, max_vars)
    names = [f'v{i}' for i in range(1, n + 1)]

    shuffled = names[:]
    rng.shuffle(shuffled)
    terms = _split(shuffled, rng.randint(1, min(max_terms, n)), rng)

    m = rng.randint(1, min(max_clauses, n))
    covered = rng.sample(names, rng.randint(m, n))
    clauses = _split(covered, m, rng)
    return clauses, terms


def random_instance(rng, max_vars=12, max_clauses=4, max_terms=5):
    """A validated Instance on a fresh registry"""
    clauses, terms = random_families(rng, max_vars, max_clauses, max_terms)
    return validate(clauses, terms, VariableRegistry())


def random_read2_cnf(rng, max_vars=14, max_clauses=None):
    """
    A LiteralCnf in which every variable occurs once or twice with random
    signs. Clauses that end up empty are left out.
    """
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_clauses or max(1, n))
    clauses = [[] for _ in range(m)]
    for var in range(n):
        for index in rng.sample(range(m), min(rng.choice((1, 2, 2)), m)):
            clauses[index].append(Literal(var, rng.random() < 0.5))
    return LiteralCnf([c for c in clauses if c], width=n)


def random_graph(rng, n, p=0.5):
    edges = frozenset(
        (u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < p
    )
    return Graph(n, edges)


def all_graphs(n):
    """Every simple graph on vertices 1..n (2^(n choose 2) of them)"""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in product((False, True), repeat=len(pairs)):
        yield Graph(n, frozenset(pair for pair, bit in zip(pairs, bits) if bit))


def _labelings(count, blocks, allow_unused):
    """
    Canonical labelings of `count` items into at most `blocks` unordered
    blocks (label 0 = left out when allowed). Labels appear in order of first
    use, so each family of blocks is produced once.
    """
    low = 0 if allow_unused else 1
    for labels in product(range(low, blocks + 1), repeat=count):
        seen = 0
        for label in labels:
            if label > seen + 1:
                break
            seen = max(seen, label)
        else:
            if seen:
                yield labels, seen


def _blocks(items, labels, used):
    return [[x for x, label in zip(items, labels) if label == b] for b in range(1, used + 1)]


def exhaustive_families(max_size=8, max_clauses=2, max_terms=2, names=CHAIN_NAMES):
    """
    All (clauses, terms) over the first s names for s = 1..max_size, with at
    most `max_terms` terms partitioning the s variables and at most
    `max_clauses` disjoint clauses. Only the first s names are used: any
    instance over an s-subset is a renaming of one of these.
    """
    for size in range(1, max_size + 1):
        universe = list(names[:size])
        partitions = [_blocks(universe, labels, used) for labels, used in _labelings(size, max_terms, False)]
        covers = [_blocks(universe, labels, used) for labels, used in _labelings(size, max_clauses, True)]
        for terms in partitions:
            for clauses in covers:
                yield clauses, terms
