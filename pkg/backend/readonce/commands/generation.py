"""
Generation commands: clique reductions and random corpora
"""
import json
import logging
from pathlib import Path

from ..corpus import corpus_passes, run_random, summarize
from ..formats import read_graph, render_families
from ..hardness import build_reduction, corollary_wrapper
from ..parser import render
from ..utils.decorators import EXIT_HOLDS, exit_code_for, handles_input_errors

logger = logging.getLogger(__name__)


@handles_input_errors
def reduce(session, graph_path, k, corollary=False, out_dir=None):
    """Write Psi, D_n, the optional wrapper and a JSON manifest for (G, k)"""
    graph = read_graph(graph_path)
    reduction = build_reduction(graph, k, registry=session.new_registry())
    manifest = reduction.manifest()

    out = Path(out_dir or session.config['OUTPUT_DIR'])
    out.mkdir(parents=True, exist_ok=True)

    files = {
        'psi': out / 'psi.txt',
        'dn': out / 'dn.dnf',
    }
    files['psi'].write_text(render(reduction.psi) + '\n')
    files['dn'].write_text(render_families(reduction.dn.terms, reduction.registry))

    if corollary:
        wrapper = corollary_wrapper(reduction.psi, reduction.dn, reduction.registry)
        files['wrapper'] = out / 'wrapper.txt'
        files['wrapper'].write_text(render(wrapper) + '\n')

    files['manifest'] = out / 'manifest.json'
    with open(files['manifest'], 'w') as f:
        json.dump(manifest, f, indent=2)

    logger.info('reduction for k=%d written to %s', k, out)
    payload = {key: value for key, value in manifest.items() if key != 'variable_names'}
    payload['files'] = {name: str(path) for name, path in files.items()}
    return payload, EXIT_HOLDS


@handles_input_errors
def corpus(session, seed=None, size=None, max_vars=None):
    """Random recognizer-versus-oracle corpus; passes on full agreement"""
    config = session.config
    seed = config['SEED'] if seed is None else seed
    size = config['CORPUS_SIZE'] if size is None else size
    max_vars = min(config['CORPUS_MAX_VARS'], max_vars or config['CORPUS_MAX_VARS'])

    df = run_random(size, seed, max_vars, config['CORPUS_MAX_CLAUSES'], config['CORPUS_MAX_TERMS'])
    summary = summarize(df)
    summary.update({'seed': seed, 'size': size, 'max_vars': max_vars})
    return summary, exit_code_for(corpus_passes(summary))
