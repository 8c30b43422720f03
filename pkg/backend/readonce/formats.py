"""
Line-oriented file formats: CNF/DNF set families and graphs
"""
from pathlib import Path

from .errors import InputFormatError
from .models.graph import Graph
from .models.variable import NAME_PATTERN


def parse_families(text):
    """
    One set per line, whitespace-separated variable names.

    Lines starting with '#' and blank lines are skipped. Returns a list of
    name lists in file order.
    """
    families = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        names = line.split()
        for name in names:
            if not NAME_PATTERN.match(name):
                raise InputFormatError(f'invalid variable name {name!r}', number)
        if len(set(names)) != len(names):
            raise InputFormatError('variable repeated within one line', number)
        families.append(names)
    return families


def read_text(path):
    """File contents as UTF-8 text; undecodable bytes are an input error"""
    try:
        return Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise InputFormatError(f'{path}: not UTF-8 text (byte {e.start})') from None


def read_families(path):
    return parse_families(read_text(path))


def render_families(families, registry):
    """Inverse of parse_families for a sequence of VarSets"""
    return ''.join(' '.join(s.names(registry)) + '\n' for s in families)


def parse_graph(text):
    """First line `n m`, then m lines `u v` with 1-indexed vertices"""
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputFormatError('expected two integers', number)
        try:
            rows.append((number, int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputFormatError('expected two integers', number) from None

    if not rows:
        raise InputFormatError('empty graph file')

    _, n, m = rows[0]
    if n < 1 or m < 0:
        raise InputFormatError('vertex count must be positive and edge count non-negative', rows[0][0])
    if len(rows) - 1 != m:
        raise InputFormatError(f'header announces {m} edges, file has {len(rows) - 1}')

    edges = set()
    for number, u, v in rows[1:]:
        if u == v:
            raise InputFormatError(f'self-loop at vertex {u}', number)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputFormatError(f'vertex out of range 1..{n}', number)
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def read_graph(path):
    return parse_graph(read_text(path))


def render_graph(graph):
    lines = [f'{graph.n} {len(graph.edges)}'] + [f'{u} {v}' for u, v in sorted(graph.edges)]
    return '\n'.join(lines) + '\n'
