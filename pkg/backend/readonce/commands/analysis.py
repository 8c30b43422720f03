"""
Analysis commands: recognizer, oracle and tautology checks
"""
import logging

from ..formats import read_families, read_text
from ..oracle import is_read_once_oracle
from ..parser import parse_formula
from ..read2_sat import implies_tautology
from ..recognizer import recognize, validate
from ..utils.decorators import exit_code_for, handles_input_errors

logger = logging.getLogger(__name__)


def _read_instance(session, cnf_path, dnf_path, cover=True):
    registry = session.new_registry()
    clauses = read_families(cnf_path)
    terms = read_families(dnf_path)
    return validate(clauses, terms, registry, cover=cover)


@handles_input_errors
def check(session, cnf_path, dnf_path):
    """Decide whether C v D is read-once"""
    inst = _read_instance(session, cnf_path, dnf_path)
    result = recognize(inst)
    logger.info('check %s / %s: %s at step %s', cnf_path, dnf_path,
                result.verdict.value, result.step.value)
    return result.to_dict(inst.registry), exit_code_for(result.read_once)


@handles_input_errors
def oracle(session, formula_path, max_vars=None):
    """Brute-force minterm/maxterm criterion on a formula file"""
    registry = session.new_registry()
    formula = parse_formula(read_text(formula_path), registry)

    limit = max_vars if max_vars is not None else session.config['MAX_VARS']
    verdict = is_read_once_oracle(formula, max_vars=limit)
    return verdict.to_dict(registry), exit_code_for(verdict.read_once)


@handles_input_errors
def taut(session, cnf_path, dnf_path):
    """Whether C -> D is a tautology, with the minimal counterexample otherwise"""
    inst = _read_instance(session, cnf_path, dnf_path, cover=False)
    holds, witness = implies_tautology(inst.cnf, inst.dnf)

    payload = {
        'tautology': holds,
        'counterexample': witness.names(inst.registry) if witness is not None else None,
    }
    return payload, exit_code_for(holds)
