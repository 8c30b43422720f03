"""
Graph input and the outputs of the clique reduction
"""
from dataclasses import dataclass

import networkx as nx

from ..errors import ReductionError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n"""
    n: int
    edges: frozenset

    def __post_init__(self):
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ReductionError(f'self-loop at vertex {u}')
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ReductionError(f'edge {u}-{v} leaves the vertex range 1..{self.n}')
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, 'edges', frozenset(normalized))

    @classmethod
    def complete(cls, n):
        return cls(n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @classmethod
    def empty(cls, n):
        return cls(n, frozenset())

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def adjacent(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self):
        return {'n': self.n, 'edges': sorted(self.edges)}

    def __repr__(self):
        return f'<Graph n={self.n} m={len(self.edges)}>'


@dataclass(frozen=True, order=True)
class ConfEntry:
    """
    One end configuration {(i, u), (j, v)}: cells i < j, vertices u, v not adjacent.

    Stored with the smaller cell first, so field order is the sort order.
    """
    i: int
    u: int
    j: int
    v: int

    def __post_init__(self):
        if self.i >= self.j:
            raise ReductionError('configuration cells must be distinct and stored in ascending order')

    def outcomes(self):
        """The two Alice-Merlin outcomes that end in this configuration"""
        return (self.i, self.u, self.j, self.v), (self.j, self.v, self.i, self.u)

    def to_dict(self):
        return {'cells': [[self.i, self.u], [self.j, self.v]]}


def outcome_name(i, u, j, v):
    """Variable name x_i_u_j_v: Merlin picked cell i, Alice wrote u, Merlin wrote v in cell j"""
    return f'x_{i}_{u}_{j}_{v}'


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    k: int
    conf: tuple
    psi: object
    dn: object
    registry: object

    @property
    def n_vars(self):
        return 2 * len(self.conf)

    def outcome(self, i, u, j, v):
        """The Variable for outcome (i, u) -> (j, v)"""
        return self.registry[outcome_name(i, u, j, v)]

    def manifest(self):
        return {
            'n_vars': self.n_vars,
            'conf_size': len(self.conf),
            'k': self.k,
            'graph': self.graph.to_dict(),
            'variable_names': [v.name for v in self.registry],
        }

    def __repr__(self):
        return f'<ReductionOutput k={self.k} conf={len(self.conf)} vars={self.n_vars}>'
