"""
Corpus Analysis Script
Uses Pandas to compare the recognizer against the brute-force oracle
"""
import json
import os
import sys
from datetime import datetime

import pandas as pd

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from readonce import create_session  # noqa: E402
from readonce.corpus import corpus_passes, run_exhaustive, run_random, summarize  # noqa: E402


def get_corpus_data(session):
    """Random corpus from the session config plus every instance on up to 5 variables"""
    config = session.config
    random_df = run_random(
        config['CORPUS_SIZE'], config['SEED'], config['CORPUS_MAX_VARS'],
        config['CORPUS_MAX_CLAUSES'], config['CORPUS_MAX_TERMS'],
    )
    exhaustive_df = run_exhaustive(max_size=5)
    return pd.concat([random_df, exhaustive_df], ignore_index=True)


def analyze_agreement(df):
    """Recognizer/oracle agreement overall and by source"""
    print("=== RECOGNIZER VS ORACLE ===\n")

    total = len(df)
    agreed = int(df['agree'].sum())
    print(f"Total Instances: {total}")
    print(f"Agreeing Verdicts: {agreed}")
    print(f"Agreement Rate: {agreed / total * 100:.2f}%" if total else "Agreement Rate: n/a")

    print("\n--- Agreement by Source ---")
    by_source = df.groupby('source').agg({
        'agree': ['count', 'mean'],
        'oracle_read_once': 'mean',
    }).round(3)
    by_source.columns = ['instances', 'agreement', 'read_once_share']
    print(by_source)

    disagreements = df[~df['agree']]
    if len(disagreements):
        print("\n⚠️  Disagreements:")
        print(disagreements[['source', 'n_vars', 'm', 'l', 'verdict', 'step']])
    return by_source


def analyze_steps(df):
    """Which pipeline stage decided each verdict"""
    print("\n=== DECIDING STEP ===\n")
    steps = df.groupby('step').agg({
        'source': 'count',
        'n_vars': 'mean',
        'seconds': ['mean', 'max'],
    }).round(4)
    steps.columns = ['instances', 'mean_vars', 'mean_seconds', 'max_seconds']
    print(steps.sort_values('instances', ascending=False))

    print("\n--- Recognizer Time by Variable Count ---")
    timing = df.groupby('n_vars')['seconds'].agg(['mean', 'median', 'count']).round(4)
    print(timing)
    return steps


def generate_corpus_report(df, session):
    """Save the summary as JSON and the per-instance rows as CSV"""
    summary = summarize(df)
    report = {
        'generated_at': datetime.now().isoformat(),
        'environment': session.name,
        'seed': session.config['SEED'],
        'passes': corpus_passes(summary),
        **summary,
    }

    with open('corpus_report.json', 'w') as f:
        json.dump(report, f, indent=2, default=str)
    df.to_csv('corpus_results.csv', index=False)

    print("\n📄 Corpus report saved as 'corpus_report.json'")
    print("📄 Per-instance results saved as 'corpus_results.csv'")
    return report


def main():
    """Main analysis function"""
    session = create_session(os.environ.get('READONCE_ENV', 'development'))

    print("🔄 Running recognizer corpus...")
    df = get_corpus_data(session)
    print(f"Loaded {len(df)} instances ({(df['source'] == 'random').sum()} random)")

    analyze_agreement(df)
    analyze_steps(df)
    report = generate_corpus_report(df, session)

    print("\n✅ Corpus passes" if report['passes'] else "\n❌ Corpus has disagreements")
    return 0 if report['passes'] else 1


if __name__ == "__main__":
    sys.exit(main())
