"""
Tests for the clique reduction, the read-once wrapper and the four-variable gadget
"""
import random
from itertools import combinations

import pytest

from readonce.errors import ReductionError
from readonce.generators import all_graphs, random_graph
from readonce.hardness import (
    build_conf, build_reduction, chain_dnf, clique_point, corollary_wrapper,
    decode_clique, has_clique, is_and_or_and, lemma8_gadget, winning_strategy, wrapper_core,
)
from readonce.models import (
    Graph, ReadOnceDnf, Var, VariableRegistry, VarSet, max_occurrences, restrict,
)
from readonce.oracle import brute_tautology, is_read_once_oracle, truth_table
from samples import names

TWO_ISOLATED = Graph.empty(2)
TRIANGLE = Graph.complete(3)


def clique_by_subsets(graph, k):
    return any(
        all(graph.adjacent(u, v) for u, v in combinations(subset, 2))
        for subset in combinations(graph.vertices, k)
    )


class TestConf:

    @pytest.mark.parametrize('graph, k, size', [
        (TRIANGLE, 2, 3),
        (TWO_ISOLATED, 2, 4),
        (TRIANGLE, 3, 9),
    ])
    def test_sizes(self, graph, k, size):
        assert len(build_conf(graph, k)) == size

    def test_sorted_and_unique(self):
        conf = build_conf(Graph(3, frozenset({(1, 2)})), 3)
        assert conf == sorted(set(conf))

    def test_entries_are_non_edges(self):
        graph = Graph(3, frozenset({(1, 2)}))
        for entry in build_conf(graph, 2):
            assert entry.i < entry.j
            assert entry.u == entry.v or not graph.adjacent(entry.u, entry.v)

    def test_k_below_two(self):
        with pytest.raises(ReductionError, match='k < 2'):
            build_conf(TRIANGLE, 1)


class TestGraph:

    def test_self_loop(self):
        with pytest.raises(ReductionError):
            Graph(2, frozenset({(1, 1)}))

    def test_vertex_range(self):
        with pytest.raises(ReductionError):
            Graph(2, frozenset({(1, 3)}))

    def test_edges_are_normalized(self):
        assert Graph(3, frozenset({(3, 1)})).adjacent(1, 3)

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_has_clique_matches_subset_scan(self, n):
        for graph in all_graphs(n):
            for k in range(1, n + 2):
                assert has_clique(graph, k) == clique_by_subsets(graph, k)


class TestReduction:

    def test_triangle_pair(self):
        red = build_reduction(TRIANGLE, 2)
        assert red.n_vars == 6 == len(red.registry)
        assert not brute_tautology(red.psi, red.dn.to_formula(red.registry))

    def test_two_isolated_vertices(self):
        red = build_reduction(TWO_ISOLATED, 2)
        assert red.n_vars == 8
        assert brute_tautology(red.psi, red.dn.to_formula(red.registry))

    def test_triangle_triple(self):
        red = build_reduction(TRIANGLE, 3)
        assert red.n_vars == 18
        assert not brute_tautology(red.psi, red.dn.to_formula(red.registry))

    def test_variable_names(self):
        red = build_reduction(TRIANGLE, 2)
        assert [v.name for v in red.registry][:2] == ['x_1_1_2_1', 'x_2_1_1_1']

    def test_dn_pairs_outcomes(self):
        red = build_reduction(TWO_ISOLATED, 2)
        for entry, term in zip(red.conf, red.dn.terms):
            first, second = entry.outcomes()
            assert term == VarSet.of([red.outcome(*first), red.outcome(*second)])

    def test_k_larger_than_n(self):
        red = build_reduction(Graph.complete(2), 3)
        assert is_and_or_and(red.psi)
        assert winning_strategy(red) is None

    def test_manifest(self):
        manifest = build_reduction(TRIANGLE, 2).manifest()
        assert manifest['n_vars'] == 6
        assert manifest['conf_size'] == 3
        assert manifest['k'] == 2
        assert len(manifest['variable_names']) == 6

    @pytest.mark.parametrize('n', [1, 2, 3])
    @pytest.mark.parametrize('k', [2, 3])
    def test_clique_iff_not_tautology(self, n, k):
        for graph in all_graphs(n):
            red = build_reduction(graph, k)
            clique = has_clique(graph, k)
            assert (winning_strategy(red) is not None) == clique
            if red.n_vars <= 18:
                assert brute_tautology(red.psi, red.dn.to_formula(red.registry)) == (not clique)

    def test_shape_on_random_graphs(self):
        rng = random.Random(89)
        for _ in range(50):
            graph = random_graph(rng, rng.randint(1, 5))
            k = rng.randint(2, 4)
            red = build_reduction(graph, k)
            assert max_occurrences(red.psi) == 1
            assert is_and_or_and(red.psi)
            assert red.n_vars == 2 * len(red.conf) == len(red.registry)
            wrapper = corollary_wrapper(red.psi, red.dn, red.registry)
            assert max_occurrences(wrapper) == 2
            assert wrapper.depth() <= 3


class TestCliquePoints:

    def test_clique_point_satisfies_psi_and_falsifies_dn(self):
        red = build_reduction(TRIANGLE, 3)
        point = clique_point(red, [1, 2, 3])
        assert red.psi.evaluate(point.mask)
        assert not red.dn.evaluate(point)

    def test_decode_round_trip(self):
        graph = Graph(4, frozenset({(1, 2), (2, 3), (1, 3), (3, 4)}))
        red = build_reduction(graph, 3)
        assert decode_clique(red, clique_point(red, [2, 3, 1])) == [2, 3, 1]

    def test_decoded_vertices_form_a_clique(self):
        red = build_reduction(TRIANGLE, 2)
        strategy = winning_strategy(red)
        clique = decode_clique(red, clique_point(red, strategy))
        assert graph_clique(TRIANGLE, clique)

    def test_non_clique_rejected(self):
        red = build_reduction(Graph(3, frozenset({(1, 2)})), 2)
        with pytest.raises(ReductionError, match='not adjacent'):
            clique_point(red, [1, 3])

    def test_decode_needs_a_separating_point(self):
        red = build_reduction(TRIANGLE, 2)
        with pytest.raises(ReductionError):
            decode_clique(red, clique_point(red, [1, 2]).with_value(red.outcome(2, 2, 1, 2), 0))


def graph_clique(graph, vertices):
    return all(graph.adjacent(u, v) for u, v in combinations(vertices, 2))


class TestWrapper:

    def test_tautology_gives_read_once(self, registry):
        x1 = Var(registry.intern('x1'))
        wrapper = corollary_wrapper(x1, ReadOnceDnf([VarSet.of([x1.variable])]), registry)
        assert is_read_once_oracle(wrapper).read_once

    def test_collision(self, registry):
        w1 = Var(registry.intern('w1'))
        with pytest.raises(ReductionError, match='w-variables collide'):
            corollary_wrapper(w1, ReadOnceDnf([VarSet.of([w1.variable])]), registry)

    def test_triangle_wrapper_is_not_read_once(self):
        red = build_reduction(TRIANGLE, 2)
        wrapper = corollary_wrapper(red.psi, red.dn, red.registry)
        assert len(wrapper.variables()) == 10
        assert not is_read_once_oracle(wrapper).read_once

    @pytest.mark.parametrize('graph', [TRIANGLE, TWO_ISOLATED])
    def test_read_once_iff_tautology(self, graph):
        red = build_reduction(graph, 2)
        dn = red.dn.to_formula(red.registry)
        wrapper = corollary_wrapper(red.psi, red.dn, red.registry)
        assert is_read_once_oracle(wrapper).read_once == brute_tautology(red.psi, dn)

    def test_restriction_at_a_separating_point(self):
        red = build_reduction(TRIANGLE, 2)
        point = clique_point(red, [1, 2])
        fixed = {v: point[v] for v in range(red.n_vars)}
        wrapper = corollary_wrapper(red.psi, red.dn, red.registry)
        assert restrict(wrapper, fixed) == wrapper_core(red.registry)


class TestGadget:

    def test_not_read_once(self):
        registry = VariableRegistry()
        verdict = is_read_once_oracle(lemma8_gadget(registry))
        assert not verdict.read_once
        minterm, maxterm = verdict.witness
        assert names(minterm, registry) == ['w1', 'w2', 'w3']
        assert names(maxterm, registry) == ['w1', 'w2']

    def test_equals_wrapper_core(self):
        registry = VariableRegistry()
        gadget = lemma8_gadget(registry)
        core = wrapper_core(registry)
        variables = list(range(4))
        assert (truth_table(gadget, variables) == truth_table(core, variables)).all()

    def test_swap_symmetry(self):
        registry = VariableRegistry()
        gadget = lemma8_gadget(registry)
        for mask in range(16):
            swapped = (mask >> 2) | ((mask & 0b11) << 2)
            assert gadget.evaluate(mask) == gadget.evaluate(swapped)


class TestChain:

    def test_chain_dnf(self, registry):
        dn = chain_dnf(registry, 3)
        assert len(dn) == 3
        assert [t.names(registry) for t in dn.terms] == [['x1', 'y1'], ['x2', 'y2'], ['x3', 'y3']]
