#!/usr/bin/env python3
"""
Write sample inputs for the readonce CLI to samples/
"""
import os
import random
import sys

# Add backend to path
backend_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'backend')
sys.path.insert(0, backend_path)

from readonce.formats import render_graph  # noqa: E402
from readonce.generators import random_families, random_graph  # noqa: E402
from readonce.hardness import lemma8_gadget  # noqa: E402
from readonce.models import Graph  # noqa: E402
from readonce.parser import render  # noqa: E402

SAMPLES_DIR = 'samples'

# name -> (clauses, terms)
FAMILIES = {
    'one_clause': (['x1 x2'], ['x1 y1', 'x2 y2']),
    'two_clauses': (['x1 x2', 'y1 y2'], ['x1 y1', 'x2 y2']),
    'with_unit': (['x1 x2', 'x3'], ['x1 y1', 'x2 y2', 'x3 y3']),
    'tautology': (['x1', 'y1'], ['x1 y1']),
}

GRAPHS = {
    'triangle': Graph.complete(3),
    'two_isolated': Graph.empty(2),
    'path3': Graph(3, frozenset({(1, 2), (2, 3)})),
}


def write(name, text):
    path = os.path.join(SAMPLES_DIR, name)
    with open(path, 'w') as f:
        f.write(text)
    return path


def generate_demo_data(seed=0, random_count=5):
    """Fixed examples plus a few seeded random instances and graphs"""
    os.makedirs(SAMPLES_DIR, exist_ok=True)
    print(f"🧹 Writing samples to {SAMPLES_DIR}/")

    for name, (clauses, terms) in FAMILIES.items():
        write(f'{name}.cnf', '\n'.join(clauses) + '\n')
        write(f'{name}.dnf', '\n'.join(terms) + '\n')
    print(f"✅ Created {len(FAMILIES)} CNF/DNF pairs")

    write('gadget.txt', render(lemma8_gadget()) + '\n')
    write('chain.txt', 'x1 & y1 | x2 & y2 | x3 & y3\n')
    print("✅ Created 2 formula files")

    for name, graph in GRAPHS.items():
        write(f'{name}.graph', render_graph(graph))
    print(f"✅ Created {len(GRAPHS)} graphs")

    rng = random.Random(seed)
    for index in range(1, random_count + 1):
        clauses, terms = random_families(rng, max_vars=10)
        write(f'random{index}.cnf', '\n'.join(' '.join(c) for c in clauses) + '\n')
        write(f'random{index}.dnf', '\n'.join(' '.join(t) for t in terms) + '\n')
        write(f'random{index}.graph', render_graph(random_graph(rng, rng.randint(3, 5))))
    print(f"✅ Created {random_count} random instances and graphs (seed {seed})")

    print("\n🎉 Demo data generated successfully!")
    print("Try:")
    print(f"  python backend/run.py check {SAMPLES_DIR}/with_unit.cnf {SAMPLES_DIR}/with_unit.dnf")
    print(f"  python backend/run.py oracle {SAMPLES_DIR}/gadget.txt")
    print(f"  python backend/run.py reduce {SAMPLES_DIR}/triangle.graph -k 2 --corollary")


if __name__ == '__main__':
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    generate_demo_data(seed)
