"""
Tests for the read-2 satisfiability engine and the C -> D tautology test
"""
import random
from itertools import product

import numpy as np
import pytest

from readonce.errors import NotRead2Error
from readonce.generators import random_instance, random_read2_cnf
from readonce.models import Literal, LiteralCnf, ReadOnceCnf, ReadOnceDnf, VarSet
from readonce.oracle import brute_tautology
from readonce.read2_sat import (
    encode_refutation, implies_tautology, minimal_zero_witness, solve_read2,
)
from samples import ONE_CLAUSE, TWO_CLAUSES, WITH_UNIT, names


def brute_sat(cnf):
    index = np.arange(1 << cnf.width, dtype=np.int64)
    satisfied = np.ones(len(index), dtype=bool)
    for clause in cnf.clauses:
        hit = np.zeros(len(index), dtype=bool)
        for lit in clause:
            hit |= ((index >> lit.var) & 1) == int(lit.positive)
        satisfied &= hit
    return bool(satisfied.any())


class TestLiteralCnf:

    def test_tautological_clauses_dropped(self):
        cnf = LiteralCnf([[Literal(0), Literal(0, False)], [Literal(1)]])
        assert len(cnf) == 1

    def test_read2_flag(self):
        assert LiteralCnf([[Literal(0)], [Literal(0, False)]]).is_read2()
        assert not LiteralCnf([[Literal(0)], [Literal(0)], [Literal(0, False), Literal(1)]]).is_read2()

    def test_assign(self):
        cnf = LiteralCnf([[Literal(0), Literal(1)], [Literal(0, False), Literal(2)]])
        reduced = cnf.assign({0: 1})
        assert reduced.clauses == (frozenset({Literal(2)}),)
        assert reduced.width == cnf.width


class TestSolveRead2:

    def test_contradiction(self):
        assert not solve_read2(LiteralCnf([[Literal(0)], [Literal(0, False)]])).satisfiable

    def test_exclusive_or_pair(self):
        cnf = LiteralCnf([[Literal(0), Literal(1)], [Literal(0, False), Literal(1, False)]])
        result = solve_read2(cnf)
        assert result.satisfiable
        assert cnf.is_satisfied_by(result.model)

    def test_refutation_model(self, make_instance):
        inst = make_instance(*TWO_CLAUSES)
        refutation = encode_refutation(inst.cnf, inst.dnf)
        assert refutation.is_read2()
        result = solve_read2(refutation)
        assert result.satisfiable
        assert refutation.is_satisfied_by(result.model)

    def test_empty_cnf_is_satisfiable(self):
        assert solve_read2(LiteralCnf([], width=3)).satisfiable

    def test_empty_clause_is_unsatisfiable(self):
        assert not solve_read2(LiteralCnf([[]], width=1)).satisfiable

    def test_rejects_read3(self):
        cnf = LiteralCnf([[Literal(0)], [Literal(0), Literal(1)], [Literal(0, False)]])
        with pytest.raises(NotRead2Error, match='not read-2'):
            solve_read2(cnf)

    def test_agrees_with_brute_force(self):
        rng = random.Random(41)
        for _ in range(500):
            cnf = random_read2_cnf(rng, max_vars=14)
            result = solve_read2(cnf)
            assert result.satisfiable == brute_sat(cnf)
            if result.satisfiable:
                assert cnf.is_satisfied_by(result.model)


class TestImpliesTautology:

    def test_unit_clauses_force_the_term(self, make_instance):
        inst = make_instance(['x1', 'y1'], ['x1 y1'])
        assert implies_tautology(inst.cnf, inst.dnf) == (True, None)

    def test_two_clause_counterexample(self, make_instance):
        inst = make_instance(*TWO_CLAUSES)
        holds, witness = implies_tautology(inst.cnf, inst.dnf)
        assert not holds
        assert names(witness, inst.registry) == ['x1', 'y2']

    def test_unit_clause_counterexample(self, make_instance):
        inst = make_instance(*WITH_UNIT)
        holds, witness = implies_tautology(inst.cnf, inst.dnf)
        assert not holds
        assert names(witness, inst.registry) == ['x1', 'x3']

    def test_empty_families(self):
        empty_cnf, empty_dnf = ReadOnceCnf([]), ReadOnceDnf([])
        assert implies_tautology(empty_cnf, empty_dnf) == (False, VarSet())
        assert implies_tautology(empty_cnf, ReadOnceDnf([VarSet()]))[0]
        assert implies_tautology(ReadOnceCnf([VarSet()]), empty_dnf)[0]

    def test_agrees_with_brute_force(self):
        rng = random.Random(43)
        for _ in range(300):
            inst = random_instance(rng, max_vars=12)
            c = inst.cnf.to_formula(inst.registry)
            d = inst.dnf.to_formula(inst.registry)
            holds, witness = implies_tautology(inst.cnf, inst.dnf)
            assert holds == brute_tautology(c, d)
            if not holds:
                assert inst.cnf.evaluate(witness) and not inst.dnf.evaluate(witness)
                for v in witness:
                    assert not inst.cnf.evaluate(witness.discard(v))

    def test_witness_is_least_minimal_set(self):
        rng = random.Random(47)
        for _ in range(100):
            inst = random_instance(rng, max_vars=8)
            holds, witness = implies_tautology(inst.cnf, inst.dnf)
            if holds:
                continue
            selections = [
                VarSet.of(choice) for choice in product(*(c.ids() for c in inst.clauses))
                if not inst.dnf.evaluate(VarSet.of(choice))
            ]
            assert witness == min(selections, key=lambda s: s.ids())


class TestMinimalZeroWitness:

    def test_tautology_has_none(self, make_instance):
        inst = make_instance(['x1', 'y1'], ['x1 y1'])
        assert minimal_zero_witness(inst.cnf, inst.dnf) is None

    def test_one_variable_per_term(self, make_instance):
        inst = make_instance(*ONE_CLAUSE)
        witness = minimal_zero_witness(inst.cnf, inst.dnf)
        assert names(witness, inst.registry) == ['x1', 'y2']

    def test_properties(self):
        rng = random.Random(53)
        for _ in range(200):
            inst = random_instance(rng, max_vars=10)
            witness = minimal_zero_witness(inst.cnf, inst.dnf)
            if witness is None:
                continue
            everything = inst.variables() | inst.cnf.variables()
            rest = everything - witness
            assert inst.cnf.evaluate(rest) and not inst.dnf.evaluate(rest)
            assert all(len(witness & term) == 1 for term in inst.terms)
