"""
Small instances shared by several test modules
"""
from readonce.models import And, Or, Var

# C = (x1 | x2), D = x1 y1 | x2 y2: the function is x1 | x2
ONE_CLAUSE = (['x1 x2'], ['x1 y1', 'x2 y2'])

# C = (x1 | x2)(y1 | y2), D = x1 y1 | x2 y2: the function is C
TWO_CLAUSES = (['x1 x2', 'y1 y2'], ['x1 y1', 'x2 y2'])

# C = (x1 | x2) x3, D = x1 y1 | x2 y2 | x3 y3: not read-once
WITH_UNIT = (['x1 x2', 'x3'], ['x1 y1', 'x2 y2', 'x3 y3'])

GADGET = 'w2 & w3 & w4 | w1 & w3 & w4 | w1 & w2 & w4 | w1 & w2 & w3'


def names(varset, registry):
    return None if varset is None else varset.names(registry)


def random_formula(rng, registry, pool, depth=3):
    """Random AND/OR tree over names drawn from `pool` (repeats allowed)"""
    if depth == 0 or rng.random() < 0.3:
        return Var(registry.intern(rng.choice(pool)))
    gate = And if rng.random() < 0.5 else Or
    return gate([random_formula(rng, registry, pool, depth - 1) for _ in range(rng.randint(2, 3))])
