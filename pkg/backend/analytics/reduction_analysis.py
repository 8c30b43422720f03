"""
Reduction Analysis Script
Sweeps small graphs through the clique reduction and tabulates the outcomes
"""
import json
import os
import sys
from datetime import datetime

import pandas as pd

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from readonce import create_session  # noqa: E402
from readonce.generators import all_graphs  # noqa: E402
from readonce.hardness import (  # noqa: E402
    build_reduction, corollary_wrapper, has_clique, is_and_or_and, winning_strategy,
)
from readonce.models import max_occurrences  # noqa: E402
from readonce.oracle import brute_tautology, is_read_once_oracle  # noqa: E402

# Wrapper gets 4 more variables than the reduction
ORACLE_LIMIT = 18


def get_reduction_data(max_n=3, ks=(2, 3)):
    """One row per (graph, k) with the structural and semantic checks"""
    rows = []
    for n in range(1, max_n + 1):
        for graph in all_graphs(n):
            for k in ks:
                red = build_reduction(graph, k)
                wrapper = corollary_wrapper(red.psi, red.dn, red.registry)
                small = red.n_vars <= ORACLE_LIMIT

                row = {
                    'n': n,
                    'edges': len(graph.edges),
                    'k': k,
                    'n_vars': red.n_vars,
                    'conf_size': len(red.conf),
                    'clique': has_clique(graph, k),
                    'strategy': winning_strategy(red) is not None,
                    'psi_shape_ok': is_and_or_and(red.psi),
                    'wrapper_read2': max_occurrences(wrapper) == 2,
                    'tautology': None,
                    'wrapper_read_once': None,
                }
                if small:
                    row['tautology'] = brute_tautology(red.psi, red.dn.to_formula(red.registry))
                    row['wrapper_read_once'] = is_read_once_oracle(wrapper, max_vars=None).read_once
                rows.append(row)
    return pd.DataFrame(rows)


def analyze_equivalences(df):
    """clique <=> strategy <=> not tautology <=> wrapper not read-once"""
    print("=== REDUCTION EQUIVALENCES ===\n")

    print(f"Total (graph, k) pairs: {len(df)}")
    print(f"Clique iff strategy: {(df['clique'] == df['strategy']).all()}")
    print(f"Psi in AND-OR-AND form: {df['psi_shape_ok'].all()}")
    print(f"Wrapper read-2: {df['wrapper_read2'].all()}")

    checked = df[df['tautology'].notna()]
    clique_vs_taut = (checked['clique'] == ~checked['tautology'].astype(bool)).all()
    taut_vs_wrapper = (checked['tautology'] == checked['wrapper_read_once']).all()
    print(f"Brute-forced pairs: {len(checked)}")
    print(f"Clique iff not tautology: {clique_vs_taut}")
    print(f"Tautology iff wrapper read-once: {taut_vs_wrapper}")

    print("\n--- Size by k ---")
    sizes = df.groupby(['k', 'n']).agg({
        'n_vars': ['min', 'max'],
        'clique': 'mean',
    }).round(3)
    sizes.columns = ['min_vars', 'max_vars', 'clique_share']
    print(sizes)
    return bool(clique_vs_taut and taut_vs_wrapper and (df['clique'] == df['strategy']).all())


def generate_reduction_report(df, consistent):
    report = {
        'generated_at': datetime.now().isoformat(),
        'pairs': len(df),
        'brute_forced': int(df['tautology'].notna().sum()),
        'consistent': consistent,
        'max_vars': int(df['n_vars'].max()),
        'clique_share_by_k': df.groupby('k')['clique'].mean().round(3).to_dict(),
    }
    with open('reduction_report.json', 'w') as f:
        json.dump(report, f, indent=2, default=str)

    print("\n📄 Reduction report saved as 'reduction_report.json'")
    return report


def main():
    create_session(os.environ.get('READONCE_ENV', 'development'))

    print("🔄 Building reductions for every graph on up to 3 vertices...")
    df = get_reduction_data()
    consistent = analyze_equivalences(df)
    generate_reduction_report(df, consistent)

    print("\n✅ All equivalences hold" if consistent else "\n❌ Reduction mismatch found")
    return 0 if consistent else 1


if __name__ == "__main__":
    sys.exit(main())
