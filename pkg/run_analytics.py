#!/usr/bin/env python3
"""
Quick script to run the corpus and reduction analyses
"""
import os
import subprocess
import sys

SCRIPTS = [
    ('Recognizer corpus', 'corpus_analysis.py'),
    ('Clique reduction sweep', 'reduction_analysis.py'),
]


def main():
    """Run every analysis script from backend/analytics"""
    analytics_dir = os.path.join('backend', 'analytics')
    if not os.path.exists(os.path.join(analytics_dir, 'corpus_analysis.py')):
        print("❌ Error: Please run this script from the project root directory")
        print("Example: python run_analytics.py")
        sys.exit(1)

    print("🚀 Starting read-once analytics...")
    print("=" * 50)
    print("📊 Reports:")
    print("  • corpus_report.json / corpus_results.csv")
    print("  • reduction_report.json")
    print("=" * 50)

    failed = []
    for title, script in SCRIPTS:
        print(f"\n▶️  {title}")
        try:
            subprocess.run([sys.executable, script], cwd=analytics_dir, check=True)
        except subprocess.CalledProcessError as e:
            print(f"❌ {script} failed with exit code {e.returncode}")
            failed.append(script)
        except KeyboardInterrupt:
            print("\n👋 Analytics stopped")
            sys.exit(130)

    if failed:
        print(f"\n💡 Check the output of: {', '.join(failed)}")
        sys.exit(1)
    print(f"\n✅ Reports written to {analytics_dir}")


if __name__ == "__main__":
    main()
