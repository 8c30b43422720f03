"""
Tests for the session factory, file formats, generators and corpus summaries
"""
import random

import pandas as pd
import pytest

from readonce import create_session
from readonce.corpus import COLUMNS, corpus_passes, run_exhaustive, run_random, summarize
from readonce.errors import InputFormatError
from readonce.formats import (
    parse_families, parse_graph, read_families, read_graph, render_families, render_graph,
)
from readonce.generators import (
    exhaustive_families, random_families, random_graph, random_read2_cnf,
)
from readonce.models import Graph, VariableRegistry, VarSet


class TestSession:

    def test_testing_config(self, session):
        assert session.name == 'testing'
        assert session.config['CORPUS_SIZE'] == 60
        assert session.config['LOG_LEVEL'] == 'WARNING'

    def test_unknown_name_falls_back(self):
        assert create_session('staging').name == 'development'

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv('READONCE_MAX_VARS', '10')
        assert create_session('testing').config['MAX_VARS'] == 10

    def test_new_registry(self, session):
        first = session.new_registry()
        first.intern('a')
        assert len(session.new_registry()) == 0


class TestFormats:

    def test_families(self):
        text = '# C\nx1 x2\n\n  y1  \n'
        assert parse_families(text) == [['x1', 'x2'], ['y1']]

    def test_repeated_name(self):
        with pytest.raises(InputFormatError, match='line 2'):
            parse_families('x1\nx2 x2\n')

    def test_bad_name(self):
        with pytest.raises(InputFormatError, match='invalid variable name'):
            parse_families('x1 2y\n')

    def test_render_families(self):
        registry = VariableRegistry(['b', 'a'])
        text = render_families([VarSet.of([0, 1]), VarSet.of([0])], registry)
        assert parse_families(text) == [['a', 'b'], ['b']]

    def test_graph(self):
        graph = parse_graph('3 2\n2 1\n2 3\n')
        assert graph.n == 3
        assert graph.adjacent(1, 2) and graph.adjacent(3, 2)
        assert not graph.adjacent(1, 3)

    def test_render_graph(self):
        graph = random_graph(random.Random(2), 5)
        assert parse_graph(render_graph(graph)) == graph

    @pytest.mark.parametrize('reader', [read_families, read_graph])
    def test_undecodable_bytes(self, reader, tmp_path):
        path = tmp_path / 'binary.txt'
        path.write_bytes(b'2 1\n1 \xff\n')
        with pytest.raises(InputFormatError, match='not UTF-8 text'):
            reader(path)

    @pytest.mark.parametrize('text, message', [
        ('', 'empty graph file'),
        ('2 1\n1 1\n', 'self-loop'),
        ('2 1\n1 3\n', 'out of range'),
        ('2 1\n1 x\n', 'expected two integers'),
        ('2 2\n1 2\n', 'header announces'),
    ])
    def test_graph_errors(self, text, message):
        with pytest.raises(InputFormatError, match=message):
            parse_graph(text)


class TestGenerators:

    def test_random_families_are_valid(self):
        rng = random.Random(61)
        for _ in range(200):
            clauses, terms = random_families(rng, max_vars=9)
            term_names = [name for term in terms for name in term]
            clause_names = [name for clause in clauses for name in clause]
            assert len(term_names) == len(set(term_names))
            assert len(clause_names) == len(set(clause_names))
            assert set(clause_names) <= set(term_names)
            assert all(clauses) and all(terms)

    def test_random_read2_cnf(self):
        rng = random.Random(67)
        for _ in range(100):
            assert random_read2_cnf(rng).is_read2()

    def test_exhaustive_count(self):
        assert sum(1 for _ in exhaustive_families(max_size=2)) == 9

    def test_exhaustive_instances_are_distinct(self):
        seen = set()
        for clauses, terms in exhaustive_families(max_size=4):
            key = (
                frozenset(frozenset(c) for c in clauses),
                frozenset(frozenset(t) for t in terms),
            )
            assert key not in seen
            seen.add(key)

    def test_random_graph_extremes(self):
        rng = random.Random(71)
        assert random_graph(rng, 4, p=1.0) == Graph.complete(4)
        assert random_graph(rng, 4, p=0.0) == Graph.empty(4)


class TestCorpus:

    def test_random_run(self):
        df = run_random(25, seed=5, max_vars=8)
        assert list(df.columns) == COLUMNS
        assert len(df) == 25
        assert df['agree'].all()
        assert df.loc[df['verdict'] == 'NOT_READ_ONCE', 'certified'].all()

    def test_same_seed_same_instances(self):
        first = run_random(10, seed=9, max_vars=8).drop(columns='seconds')
        second = run_random(10, seed=9, max_vars=8).drop(columns='seconds')
        pd.testing.assert_frame_equal(first, second)

    def test_exhaustive_run(self):
        df = run_exhaustive(max_size=3)
        assert (df['source'] == 'exhaustive').all()
        assert df['agree'].all()

    def test_summarize(self):
        df = pd.DataFrame([
            {'source': 'random', 'n_vars': 2, 'm': 1, 'l': 2, 'verdict': 'READ_ONCE', 'step': 'FINAL',
             'oracle_read_once': True, 'agree': True, 'certified': None, 'seconds': 0.5},
            {'source': 'random', 'n_vars': 4, 'm': 2, 'l': 2, 'verdict': 'NOT_READ_ONCE', 'step': '2',
             'oracle_read_once': False, 'agree': True, 'certified': True, 'seconds': 0.25},
        ], columns=COLUMNS)
        summary = summarize(df)
        assert summary['total'] == 2
        assert summary['agreement_rate'] == 1.0
        assert summary['not_read_once'] == 1
        assert summary['certified_rate'] == 1.0
        assert summary['total_seconds'] == 0.75
        assert summary['by_step']['2']['instances'] == 1
        assert corpus_passes(summary)

    def test_disagreement_fails(self):
        df = pd.DataFrame([
            {'source': 'random', 'n_vars': 2, 'm': 1, 'l': 1, 'verdict': 'READ_ONCE', 'step': 'FINAL',
             'oracle_read_once': False, 'agree': False, 'certified': None, 'seconds': 0.1},
        ], columns=COLUMNS)
        summary = summarize(df)
        assert summary['disagreements'] == 1
        assert not corpus_passes(summary)
