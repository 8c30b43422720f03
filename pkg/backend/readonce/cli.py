"""
Command-line interface.

    check  CNF DNF        is C v D read-once?            (recognizer)
    oracle FORMULA        is the formula read-once?      (brute force)
    taut   CNF DNF        is C -> D a tautology?
    reduce GRAPH -k K     clique reduction files (Psi, D_n, wrapper, manifest)
    corpus                random recognizer-versus-oracle corpus

Exit codes: 0 the property holds, 1 it fails (a certificate is printed),
2 bad input.
"""
import argparse
import json
import os
import sys

from . import create_session
from .commands import HANDLERS
from .config import CONFIGS
from .utils.decorators import EXIT_ERROR


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid integer: {text!r}') from None
    if value < 1:
        raise argparse.ArgumentTypeError('must be at least 1')
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='print the report as JSON')
    common.add_argument('--max-vars', type=positive_int, default=None,
                        help='variable limit for brute-force checks (default from config, 24)')
    common.add_argument('--seed', type=int, default=None, help='seed for random corpora')
    common.add_argument('--env', choices=sorted(CONFIGS), default=None,
                        help='configuration name (default: $READONCE_ENV or development)')

    parser = argparse.ArgumentParser(prog='readonce', description='Read-once recognition for C v D')
    sub = parser.add_subparsers(dest='command', required=True)

    check = sub.add_parser('check', parents=[common], help='recognize C v D')
    check.add_argument('cnf', help='CNF file, one clause per line')
    check.add_argument('dnf', help='DNF file, one term per line')

    oracle = sub.add_parser('oracle', parents=[common], help='brute-force read-once test')
    oracle.add_argument('formula', help='formula file')

    taut = sub.add_parser('taut', parents=[common], help='decide C -> D')
    taut.add_argument('cnf')
    taut.add_argument('dnf')

    reduce = sub.add_parser('reduce', parents=[common], help='clique reduction')
    reduce.add_argument('graph', help='graph file: "n m" then m edges')
    reduce.add_argument('-k', '--k', type=int, required=True, help='clique size')
    reduce.add_argument('--corollary', action='store_true', help='also write the read-once wrapper')
    reduce.add_argument('--out', default=None, help='output directory')

    corpus = sub.add_parser('corpus', parents=[common], help='recognizer vs oracle on random instances')
    corpus.add_argument('--size', type=positive_int, default=None, help='number of instances')

    return parser


def dispatch(session, args):
    """Run the handler for args.command; returns (payload, exit_code)"""
    handler = HANDLERS[args.command]
    if args.command in ('check', 'taut'):
        return handler(session, args.cnf, args.dnf)
    if args.command == 'oracle':
        return handler(session, args.formula, max_vars=args.max_vars)
    if args.command == 'reduce':
        return handler(session, args.graph, args.k, corollary=args.corollary, out_dir=args.out)
    return handler(session, seed=args.seed, size=args.size, max_vars=args.max_vars)


def _braces(names):
    return '{' + ', '.join(names) + '}'


def render_text(command, payload):
    if 'error' in payload:
        return f'error: {payload["error"]}'

    if command in ('check', 'oracle'):
        lines = [payload['verdict'] if payload['step'] is None
                 else f'{payload["verdict"]} (step {payload["step"]})']
        if payload['minterm'] is not None:
            lines.append(f'minterm: {_braces(payload["minterm"])}')
            lines.append(f'maxterm: {_braces(payload["maxterm"])}')
        return '\n'.join(lines)

    if command == 'taut':
        if payload['tautology']:
            return 'TAUTOLOGY'
        return f'NOT_TAUTOLOGY\ncounterexample: {_braces(payload["counterexample"])}'

    if command == 'corpus':
        lines = [
            f'instances: {payload["total"]} (seed {payload["seed"]})',
            f'agreement: {payload["agreement_rate"]:.1%}',
            f'witnesses certified: {payload["certified_rate"]:.1%}',
        ]
        for step, row in payload['by_step'].items():
            lines.append(f'  step {step}: {row["instances"]} instances')
        return '\n'.join(lines)

    return '\n'.join(f'{key}: {value}' for key, value in payload.items())


def main(argv=None, session=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    if session is None:
        session = create_session(args.env or os.environ.get('READONCE_ENV', 'development'))
    if args.seed is not None:
        session.config['SEED'] = args.seed
    if args.max_vars is not None:
        session.config['MAX_VARS'] = args.max_vars

    payload, code = dispatch(session, args)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif code == EXIT_ERROR:
        print(render_text(args.command, payload), file=sys.stderr)
    else:
        print(render_text(args.command, payload))
    return code


if __name__ == '__main__':
    sys.exit(main())
