#!/usr/bin/env python3
"""
Purity Lab CLI - Main entry point for purity checks, scans and mining
"""
import argparse
import sys
import time

from src.algebra import CLAIMS, ELEMENT_BUDGET, PurityError, ScanLimits
from src.algebra.scans import MINING_PATTERNS
from src.helpers import (
    Report,
    exit_code,
    expectation_exit_code,
    load_problem,
    mine_result,
    parse_policy,
    render,
    resolve_input,
    run_checks,
    run_enumerate,
    run_maximal_pure,
    run_mine,
    run_paper_suite,
    run_scan,
    scan_result,
    serialize_problem,
)
from src.helpers.report import EXIT_ERROR, EXIT_FAILS, EXIT_OK


class CliParser(argparse.ArgumentParser):
    """Argument errors exit with the input-error code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"Error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def _prime_powers(text: str):
    pairs = []
    for item in text.split(","):
        p, _, s = item.partition(":")
        pairs.append((int(p), int(s or 1)))
    return tuple(pairs)


def _pair(text: str):
    a, _, b = text.partition(",")
    return int(a), int(b)


def _add_output_flags(parser):
    parser.add_argument('--format', choices=['text', 'machine'], default='text',
                        help='Report format (default: text)')
    parser.add_argument('--timing', action='store_true',
                        help='Include wall-clock timing in the report')
    parser.add_argument('--quiet', action='store_true', help='No progress spinner')


def _add_level_flags(parser):
    parser.add_argument('--n', type=int, default=2, help='Purity level (default: 2; 1 means pure)')
    parser.add_argument('--policy', type=str, default=None,
                        help='exhaustive | residue:E | bounded:B (default: chosen per module)')
    parser.add_argument('--budget', type=int, default=ELEMENT_BUDGET,
                        help=f'Largest module to enumerate (default: {ELEMENT_BUDGET})')


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(
        description="Purity Lab - decide purity and n-purity of submodules over Z and Z/m",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py check problems/z4.json
  python main.py check problems/z.json --format machine
  python main.py paper-suite
  python main.py scan pure-implies-2pure cyclic:2-32
  python main.py scan local-global pairs:64 --threads 4
  python main.py mine "n-pure-not-(n-1)-pure" cyclic:2-16 --n 3
  python main.py enumerate Z12
  python main.py maximal-pure "Z2+Z2 over Z/2"

Exit codes: 0 all hold, 1 something fails, 2 something unknown, 3 input error
        """
    )

    subparsers = parser.add_subparsers(dest='command', help='Available commands',
                                       parser_class=CliParser)
    subparsers.required = True

    # Check command
    check_parser = subparsers.add_parser('check', help='Run the checks listed in a problem file')
    check_parser.add_argument('input', type=str, help='Problem file (JSON)')
    _add_level_flags(check_parser)
    _add_output_flags(check_parser)

    # Reference suite
    suite_parser = subparsers.add_parser('paper-suite', help='Run the reference examples and scans')
    _add_output_flags(suite_parser)

    # Scan command
    scan_parser = subparsers.add_parser('scan', help='Scan a claim over a module family')
    scan_parser.add_argument('claim', type=str, help=f"One of: {', '.join(sorted(CLAIMS))}")
    scan_parser.add_argument('family', type=str,
                             help='cyclic:LO-HI, cyclic-z:LO-HI, primes:LO-HI, pairs:MAX or pairs-mod:MAX')
    _add_level_flags(scan_parser)
    scan_parser.add_argument('--max-level', type=int, default=4,
                             help='Top level for the hierarchy scan (default: 4)')
    scan_parser.add_argument('--prime-powers', type=_prime_powers, default=None,
                             help='Factorisation tuple, e.g. 2:2,3:1 (default: all over 2, 3, 5)')
    scan_parser.add_argument('--pair', type=_pair, default=(2, 3),
                             help='Coprime square-free pair, e.g. 2,3 (default: 2,3)')
    scan_parser.add_argument('--unrestricted', action='store_true',
                             help='Product characterisation over all submodule tuples')
    scan_parser.add_argument('--threads', type=int, default=1, help='Worker threads (default: 1)')
    _add_output_flags(scan_parser)

    # Mine command
    mine_parser = subparsers.add_parser('mine', help='Mine witnesses over a module family')
    mine_parser.add_argument('pattern', type=str, help=f"One of: {', '.join(MINING_PATTERNS)}")
    mine_parser.add_argument('family', type=str, help='Module family, as for scan')
    _add_level_flags(mine_parser)
    _add_output_flags(mine_parser)

    # Enumerate command
    enum_parser = subparsers.add_parser('enumerate', help='List every submodule of a finite module')
    enum_parser.add_argument('input', type=str, help='Problem file or module such as "Z8+Z4 over Z"')
    enum_parser.add_argument('--budget', type=int, default=ELEMENT_BUDGET,
                             help=f'Largest module to enumerate (default: {ELEMENT_BUDGET})')
    _add_output_flags(enum_parser)

    # Maximal pure command
    maximal_parser = subparsers.add_parser('maximal-pure', help='Maximal pure submodules inside K')
    maximal_parser.add_argument('input', type=str, help='Problem file or module description')
    maximal_parser.add_argument('--submodule', type=str, default=None,
                                help='Name of K in the problem file (default: the whole module)')
    maximal_parser.add_argument('--include-self', action='store_true',
                                help='Allow N = K (non-strict reading)')
    maximal_parser.add_argument('--budget', type=int, default=ELEMENT_BUDGET,
                                help=f'Largest module to enumerate (default: {ELEMENT_BUDGET})')
    _add_output_flags(maximal_parser)

    return parser


def _limits(args) -> ScanLimits:
    return ScanLimits(
        level=args.n,
        max_level=getattr(args, 'max_level', 4),
        prime_powers=getattr(args, 'prime_powers', None),
        pair=getattr(args, 'pair', (2, 3)),
        budget=args.budget,
        policy=parse_policy(args.policy),
        unrestricted=getattr(args, 'unrestricted', False),
    )


def main(argv=None) -> int:
    """Main CLI entry point"""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()

    # Route to appropriate handler
    try:
        if args.command == 'check':
            problem = load_problem(args.input)
            results = run_checks(problem, args.n, parse_policy(args.policy), quiet=args.quiet,
                                 budget=args.budget)
            inputs = {'problem': serialize_problem(problem), 'n': args.n, 'policy': args.policy,
                      'budget': args.budget}
            report = Report('check', inputs, results)
            code = exit_code(results)

        elif args.command == 'paper-suite':
            results = run_paper_suite(quiet=args.quiet)
            report = Report('paper-suite', {}, results)
            code = expectation_exit_code(results)

        elif args.command == 'scan':
            limits = _limits(args)
            scan = run_scan(args.claim, args.family, limits, args.threads, quiet=args.quiet)
            inputs = {'claim': args.claim, 'family': args.family, 'limits': repr(limits)}
            report = Report('scan', inputs, [scan_result(scan)],
                            [v.to_dict() for v in scan.violations])
            code = EXIT_FAILS if scan.violations else EXIT_OK

        elif args.command == 'mine':
            limits = _limits(args)
            witnesses = run_mine(args.pattern, args.family, limits, quiet=args.quiet)
            inputs = {'pattern': args.pattern, 'family': args.family, 'limits': repr(limits)}
            report = Report('mine', inputs, [mine_result(args.pattern, args.family, args.n, witnesses)])
            code = EXIT_OK

        elif args.command == 'enumerate':
            problem = resolve_input(args.input)
            inputs = {'problem': serialize_problem(problem), 'budget': args.budget}
            report = Report('enumerate', inputs, [run_enumerate(problem, args.budget)])
            code = EXIT_OK

        else:
            problem = resolve_input(args.input)
            strict = not args.include_self
            inputs = {'problem': serialize_problem(problem), 'submodule': args.submodule,
                      'strict': strict, 'budget': args.budget}
            report = Report('maximal-pure', inputs,
                            [run_maximal_pure(problem, args.submodule, strict, args.budget)])
            code = EXIT_OK

    except (PurityError, ValueError, OSError) as e:
        print(f"Error: {str(e)}", file=sys.stderr)
        return EXIT_ERROR

    report.elapsed = time.perf_counter() - start
    print(render(report, args.format, args.timing))
    return code


if __name__ == '__main__':
    sys.exit(main())
