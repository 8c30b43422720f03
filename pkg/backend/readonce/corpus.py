"""
Recognizer-versus-oracle corpus runs, tabulated with pandas
"""
import logging
import random
import time

import pandas as pd

from .generators import exhaustive_families, random_instance
from .models.variable import VariableRegistry
from .oracle import certify_witness, is_read_once_oracle
from .recognizer import recognize, validate

logger = logging.getLogger(__name__)

COLUMNS = [
    'source', 'n_vars', 'm', 'l', 'verdict', 'step',
    'oracle_read_once', 'agree', 'certified', 'seconds',
]


def compare(inst, source='random', max_vars=None):
    """One corpus row: recognizer verdict, oracle verdict and witness certification"""
    formula = inst.to_formula()
    started = time.perf_counter()
    result = recognize(inst)
    elapsed = time.perf_counter() - started
    oracle = is_read_once_oracle(formula, max_vars=max_vars)

    certified = None
    if not result.read_once:
        certified = certify_witness(formula, result.minterm, result.maxterm)

    return {
        'source': source,
        'n_vars': len(inst.variables()),
        'm': len(inst.clauses),
        'l': len(inst.terms),
        'verdict': result.verdict.value,
        'step': str(result.step.value),
        'oracle_read_once': oracle.read_once,
        'agree': result.read_once == oracle.read_once,
        'certified': certified,
        'seconds': elapsed,
    }


def run_random(size, seed, max_vars=12, max_clauses=4, max_terms=5):
    """DataFrame of `size` random instances drawn from random.Random(seed)"""
    rng = random.Random(seed)
    rows = [
        compare(random_instance(rng, max_vars, max_clauses, max_terms), max_vars=max_vars)
        for _ in range(size)
    ]
    logger.info('random corpus: %d instances (seed %d)', size, seed)
    return pd.DataFrame(rows, columns=COLUMNS)


def run_exhaustive(max_size=8, max_clauses=2, max_terms=2):
    """DataFrame over every small instance of exhaustive_families"""
    rows = [
        compare(validate(clauses, terms, VariableRegistry()), source='exhaustive')
        for clauses, terms in exhaustive_families(max_size, max_clauses, max_terms)
    ]
    logger.info('exhaustive corpus: %d instances', len(rows))
    return pd.DataFrame(rows, columns=COLUMNS)


def summarize(df):
    """Agreement, certification and per-step counts of a corpus DataFrame"""
    total = len(df)
    negatives = df[df['verdict'] == 'NOT_READ_ONCE']

    by_step = df.groupby('step').agg(
        instances=('agree', 'size'),
        agreement=('agree', 'mean'),
        mean_vars=('n_vars', 'mean'),
    ).round(3)

    return {
        'total': total,
        'agreement_rate': float(df['agree'].mean()) if total else 1.0,
        'disagreements': int((~df['agree'].astype(bool)).sum()),
        'not_read_once': len(negatives),
        'certified_rate': float(negatives['certified'].astype(bool).mean()) if len(negatives) else 1.0,
        'total_seconds': round(float(df['seconds'].sum()), 3),
        'by_step': {step: row for step, row in by_step.to_dict(orient='index').items()},
    }


def corpus_passes(summary):
    return summary['disagreements'] == 0 and summary['certified_rate'] == 1.0
