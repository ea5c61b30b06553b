import argparse
import logging
import sys

from typing import Any, Dict, List

from . import __version__
from .census import (ALL, DEFAULT_SEED, canonical_mpm_perm, census, classify, get_suite,
                     list_suites, not3_family, verify_suite)
from .counting import (ballot_b, ballot_g, catalan, count_q0, count_q1, count_q2, derangement)
from .exceptions import BoundsError, QslabError
from .io import (dump_json, dump_yaml, export_apply_to_dict, export_to_dict,
                 import_bounds_from_yaml)
from .model import parse_word, word_with_ltr_positions
from .preimages import METHODS, count_preimages, preimages, preimages_oracle
from .sorting import run_moves, run_queue

__all__ = ['cli']

logger = logging.getLogger(__name__)

FORMATS = ('plain', 'json', 'yaml')


def _sequence_terms(name: str, terms: int) -> List[Any]:
    if name == 'q0':
        return [count_q0(n) for n in range(1, terms + 1)]
    elif name == 'q1':
        return [count_q1(n) for n in range(1, terms + 1)]
    elif name == 'q2':
        return [count_q2(n) for n in range(terms)]
    elif name == 'catalan':
        return [catalan(n) for n in range(terms)]
    elif name == 'derangement':
        return [derangement(n) for n in range(terms)]
    elif name == 'ballot-b':
        return [[ballot_b(n, i) for i in range(1, n + 1)] for n in range(1, terms + 1)]
    elif name == 'ballot-g':
        return [[ballot_g(n, i) for i in range(2, n + 2)] for n in range(1, terms + 1)]
    raise ValueError('Unknown sequence {}'.format(name))  # pragma: no cover


SEQUENCES = ('q0', 'q1', 'q2', 'catalan', 'derangement', 'ballot-b', 'ballot-g')


def _structured(data: Dict[str, Any], fmt: str) -> str:
    if fmt == 'yaml':
        return dump_yaml(data).rstrip('\n')
    return dump_json(data)


def _word_argument(args) -> Any:
    return parse_word(' '.join(args.word))


def _apply(args) -> int:
    word = _word_argument(args)
    if args.trace:
        output, trace = run_queue(word)
    else:
        output, trace = run_moves(word), None

    if args.format == 'plain':
        print(output)
        if trace is not None:
            print(trace)
    else:
        print(_structured(export_apply_to_dict(word, output, trace), args.format))
    return 0


def _preimages(args) -> int:
    word = _word_argument(args)

    if args.count_only:
        count = count_preimages(word, args.method)
        if args.format == 'plain':
            print(count)
        else:
            print(_structured({'target': list(word), 'count': str(count)}, args.format))
        return 0

    if args.method == 'oracle':
        found = preimages_oracle(word)
    else:
        found = preimages(word)

    if args.format == 'plain':
        for member in found:
            print(member)
    else:
        print(_structured(export_to_dict(found), args.format))
    return 0


def _count(args) -> int:
    word = _word_argument(args)
    count = count_preimages(word, args.method)
    if args.format == 'plain':
        print(count)
    else:
        print(_structured({'target': list(word), 'count': str(count)}, args.format))
    return 0


def _census(args) -> int:
    table = census(args.n, cutoff=args.cutoff, workers=args.workers)
    if args.format == 'plain':
        for k, value in table.items():
            print('{}: {}'.format(k, value))
    else:
        print(_structured(export_to_dict(table), args.format))
    return 0


def _classify(args) -> int:
    members = classify(args.n, args.k, cutoff=args.cutoff)
    if args.format == 'plain':
        for member in members:
            print(member)
    else:
        data = {'n': args.n, 'k': str(args.k), 'members': [list(m) for m in members]}
        print(_structured(data, args.format))
    return 0


def _sequence(args) -> int:
    if args.terms < 0:
        raise ValueError('Number of terms must be non-negative')
    terms = _sequence_terms(args.name, args.terms)
    if args.format == 'plain':
        if args.name.startswith('ballot'):
            for row in terms:
                print(' '.join(str(v) for v in row))
        else:
            print(' '.join(str(v) for v in terms))
    else:
        if args.name.startswith('ballot'):
            values = [[str(v) for v in row] for row in terms]  # type: List[Any]
        else:
            values = [str(v) for v in terms]
        print(_structured({'name': args.name, 'terms': values}, args.format))
    return 0


def _verify(args) -> int:
    if args.list:
        for name in list_suites():
            if name == ALL:
                print('{}: every non exploratory suite'.format(name))
            else:
                target = get_suite(name)
                print('{}{}: {}'.format(
                    name, ' (exploratory)' if target.exploratory else '', target.description))
        return 0

    if args.suite is None:
        raise BoundsError('A suite name is required')

    bounds = {}  # type: Dict[str, int]
    seed = DEFAULT_SEED
    if args.bounds:
        document = import_bounds_from_yaml(filepath=args.bounds)
        if document.get('suite', args.suite) != args.suite:
            raise BoundsError('Bounds file is for suite {}, not {}'.format(
                document['suite'], args.suite))
        bounds.update(document['bounds'])
        seed = document.get('seed', seed)
    if args.max_n is not None:
        bounds['max_n'] = args.max_n
    if args.seed is not None:
        seed = args.seed

    report = verify_suite(args.suite, bounds, seed=seed)

    findings = args.exploratory or (report.exploratory and not args.strict)
    if report.passed:
        print('PASS (cases: {})'.format(report.cases))
    elif findings:
        print('FINDINGS (cases: {}, findings: {})'.format(report.cases, len(report.failures)))
    else:
        print('FAIL (cases: {}, failures: {})'.format(report.cases, len(report.failures)))
    for failure in report.failures:
        print(' - {}'.format(failure))
    print(_structured(export_to_dict(report), args.format))

    return 0 if report.passed or findings else 1


def _witness(args) -> int:
    if args.family == 'mpm':
        permutation = canonical_mpm_perm(args.m1, args.p1, args.m2)
    elif args.family == 'not3':
        permutation = not3_family(args.n)
    else:
        permutation = word_with_ltr_positions(args.n, args.positions)

    if args.format == 'plain':
        print(permutation)
    else:
        print(_structured({'permutation': list(permutation)}, args.format))
    return 0


def _format_option(parser, choices=FORMATS, default='plain') -> None:
    parser.add_argument('--format', choices=choices, default=default,
                        help='Output format (default: {})'.format(default))


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qslab',
        description='Command-line utility to apply Queuesort, enumerate and count its '
                    'preimages, and verify the related enumerative results.'
    )
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='store_true', default=False,
                        help='Log diagnostics on stderr')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    apply = commands.add_parser('apply', help='Apply Queuesort to a word')
    apply.add_argument('word', nargs='+', help='A word, such as "21543" or "10 2 7"')
    apply.add_argument('--trace', action='store_true', default=False,
                       help='Also show the sequence of queue operations')
    _format_option(apply)
    apply.set_defaults(func=_apply)

    pre = commands.add_parser('preimages', help='List the preimages of a word')
    pre.add_argument('word', nargs='+', help='Target word')
    pre.add_argument('--count-only', action='store_true', default=False,
                     help='Only show the number of preimages')
    pre.add_argument('--method', choices=('recursive', 'oracle', 'auto'), default='auto',
                     help='Enumeration method (default: auto)')
    _format_option(pre)
    pre.set_defaults(func=_preimages)

    count = commands.add_parser('count', help='Count the preimages of a word')
    count.add_argument('word', nargs='+', help='Target word')
    count.add_argument('--method', choices=METHODS, default='auto',
                       help='Counting method (default: auto)')
    _format_option(count)
    count.set_defaults(func=_count)

    cen = commands.add_parser('census', help='Number of permutations of length n with k preimages')
    cen.add_argument('n', type=int, help='Length of the permutations')
    cen.add_argument('--workers', type=int, default=1, help='Number of worker processes')
    cen.add_argument('--cutoff', type=int, default=None, help='Largest accepted length')
    _format_option(cen)
    cen.set_defaults(func=_census)

    cla = commands.add_parser('classify', help='Permutations of length n with exactly k preimages')
    cla.add_argument('n', type=int, help='Length of the permutations')
    cla.add_argument('k', type=int, help='Number of preimages')
    cla.add_argument('--cutoff', type=int, default=None, help='Largest accepted length')
    _format_option(cla)
    cla.set_defaults(func=_classify)

    seq = commands.add_parser('sequence', help='Print the first terms of a sequence')
    seq.add_argument('name', choices=SEQUENCES, help='Name of the sequence')
    seq.add_argument('--terms', type=int, default=10,
                     help='Number of terms, or rows for triangles (default: 10)')
    _format_option(seq)
    seq.set_defaults(func=_sequence)

    ver = commands.add_parser('verify', help='Run a verification suite')
    ver.add_argument('suite', nargs='?', default=None, help='Name of the suite')
    ver.add_argument('--list', action='store_true', default=False, help='List available suites')
    ver.add_argument('--max-n', dest='max_n', type=int, default=None,
                     help='Override the main bound of the suite')
    ver.add_argument('--seed', type=int, default=None,
                     help='Seed for random sampling (default: {})'.format(DEFAULT_SEED))
    ver.add_argument('--bounds', metavar='FILE', default=None,
                     help='A YAML file with bounds for the suite')
    mode = ver.add_mutually_exclusive_group()
    mode.add_argument('--strict', action='store_true', default=False,
                      help='Fail on findings of exploratory suites')
    mode.add_argument('--exploratory', action='store_true', default=False,
                      help='Report failures of any suite as findings, and exit with 0')
    _format_option(ver, choices=('json', 'yaml'), default='json')
    ver.set_defaults(func=_verify)

    wit = commands.add_parser('witness', help='Build a witness permutation')
    families = wit.add_subparsers(dest='family', metavar='family')
    families.required = True

    mpm = families.add_parser('mpm', help='Canonical permutation of shape M1 P1 M2')
    mpm.add_argument('m1', type=int)
    mpm.add_argument('p1', type=int)
    mpm.add_argument('m2', type=int)
    _format_option(mpm)

    not3 = families.add_parser('not3', help='Member of the family with n+2 preimages')
    not3.add_argument('n', type=int)
    _format_option(not3)

    ltr = families.add_parser('ltr', help='Canonical permutation with given LTR positions')
    ltr.add_argument('n', type=int)
    ltr.add_argument('positions', type=int, nargs='*')
    _format_option(ltr)

    wit.set_defaults(func=_witness)
    return parser


def cli(args=None) -> int:
    parser = _parser()
    args = parser.parse_args(args)

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format='%(levelname)s %(name)s: %(message)s')

    try:
        return args.func(args)
    except (QslabError, ValueError, OSError) as e:
        logger.debug('Command %s failed', args.command, exc_info=True)
        print('qslab: error: {}'.format(e), file=sys.stderr)
        return 2
    except Exception as e:
        logger.exception('Command %s crashed', args.command)
        print('qslab: internal error: {}: {}'.format(e.__class__.__name__, e), file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(cli())
