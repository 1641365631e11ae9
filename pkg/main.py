"""
Logarithmic Hessian Toolkit
Main Application Entry Point - command-line frontend
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from automation.fuzz_runner import CorpusFuzzer, format_summary
from src.algebra import (
    CalculusError,
    LaurentError,
    classical_hessian,
    det,
    log_gauss_point,
    log_hessian,
    log_hessian_symmetric,
    parse_laurent,
)
from src.analysis import analyze_polynomial
from src.data import CorpusError, CorpusSpec
from src.ui import TextComponents
from src.utils import ConfigError, load_config, parse_point, read_expression, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2


# ==================== Commands ====================

def cmd_analyze(expression: str, n: int, output: str = 'text', stream: Optional[TextIO] = None) -> int:
    """
    Analyse and reduce one polynomial

    Args:
        expression: Polynomial text
        n: Ambient variable count
        output: 'text' or 'json'
        stream: Where the report is written

    Returns:
        Exit code: 0 ok, 1 verification failure, 2 parse error
    """
    stream = stream or sys.stdout
    try:
        f = parse_laurent(expression, n)
    except LaurentError as e:
        logger.error(f"Cannot parse expression: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    report, result = analyze_polynomial(f)
    if output == 'json':
        print(report.to_json(), file=stream)
    else:
        print(TextComponents.render_report(report), file=stream)

    problems = report.consistency_errors(result)
    if not report.verified or problems:
        logger.error(f"Verification failed for {expression}: {problems or 'certificate rejected'}")
        print(f"error: verification failed {problems}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_hessian(expression: str, n: int, kind: str = 'log', stream: Optional[TextIO] = None) -> int:
    """Print one of the Hessian matrices and its determinant"""
    stream = stream or sys.stdout
    try:
        f = parse_laurent(expression, n)
    except LaurentError as e:
        logger.error(f"Cannot parse expression: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    builders = {
        'classical': classical_hessian,
        'log': log_hessian,
        'symmetric': log_hessian_symmetric,
    }
    matrix = builders[kind](f)
    print(TextComponents.render_matrix(matrix), file=stream)
    print(TextComponents.render_determinant(det(matrix)), file=stream)
    return EXIT_OK


def cmd_gauss(expression: str, n: int, at: str, stream: Optional[TextIO] = None) -> int:
    """Print the logarithmic Gauss point of f at a torus point"""
    stream = stream or sys.stdout
    try:
        f = parse_laurent(expression, n)
        point = parse_point(at)
        print(TextComponents.render_projective_point(log_gauss_point(f, point)), file=stream)
    except (LaurentError, CalculusError, ValueError) as e:
        logger.error(f"Gauss map failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_fuzz(
    specs: List[CorpusSpec],
    workers: int = 1,
    output: str = 'text',
    stream: Optional[TextIO] = None
) -> int:
    """
    Run the property corpus

    Returns:
        0 iff every instance passes every check
    """
    stream = stream or sys.stdout
    fuzzer = CorpusFuzzer(workers=workers)
    summaries = fuzzer.run_many(specs)
    if output == 'json':
        print(json.dumps([s.to_dict() for s in summaries], indent=2), file=stream)
    else:
        for summary in summaries:
            print(format_summary(summary), file=stream)

    failing = [s for s in summaries if not s.ok]
    if failing:
        seed, index = failing[0].first_failure
        print(f"FAILED: reproduce with seed={seed} index={index} "
              f"(n={failing[0].spec.n}, r={failing[0].spec.rank})", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


# ==================== Argument parsing ====================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='loghesse',
        description='Vanishing logarithmic Hessians and torus reduction of Laurent polynomials',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    for name in ('analyze', 'reduce'):
        cmd = sub.add_parser(name, help='analyse and reduce a polynomial')
        cmd.add_argument('--vars', type=int, required=True, help='ambient variable count n')
        cmd.add_argument('--format', choices=['text', 'json'], default='text')
        cmd.add_argument('expr', help='expression, or @path to read it from a file')

    hessian = sub.add_parser('hessian', help='print a Hessian matrix and its determinant')
    hessian.add_argument('--vars', type=int, required=True)
    kind = hessian.add_mutually_exclusive_group()
    kind.add_argument('--classical', dest='kind', action='store_const', const='classical')
    kind.add_argument('--log', dest='kind', action='store_const', const='log')
    kind.add_argument('--symmetric', dest='kind', action='store_const', const='symmetric')
    hessian.set_defaults(kind='log')
    hessian.add_argument('expr')

    fuzz = sub.add_parser('fuzz', help='run the randomized property corpus')
    fuzz.add_argument('--vars', type=int, required=True)
    fuzz.add_argument('--rank', type=int, default=None, help='lattice rank r (default: every r in 0..n)')
    fuzz.add_argument('--terms', type=int, default=8)
    fuzz.add_argument('--seed', type=int, default=0)
    fuzz.add_argument('--count', type=int, default=50)
    fuzz.add_argument('--exponent-bound', type=int, default=4)
    fuzz.add_argument('--coefficient-bound', type=int, default=9)
    fuzz.add_argument('--workers', type=int, default=None)
    fuzz.add_argument('--format', choices=['text', 'json'], default='text')

    gauss = sub.add_parser('gauss', help='logarithmic Gauss map at a point')
    gauss.add_argument('--vars', type=int, required=True)
    gauss.add_argument('--at', required=True, help='comma-separated coordinates p1,...,pN')
    gauss.add_argument('expr')
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch, return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        config = load_config()
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    setup_logging(config.log_level)

    if args.vars < 1:
        print("error: --vars must be positive", file=sys.stderr)
        return EXIT_USAGE

    if args.command == 'fuzz':
        ranks = [args.rank] if args.rank is not None else list(range(args.vars + 1))
        try:
            specs = [
                CorpusSpec(
                    n=args.vars, rank=r, max_terms=args.terms,
                    exponent_bound=args.exponent_bound, coefficient_bound=args.coefficient_bound,
                    seed=args.seed, instance_count=args.count,
                )
                for r in ranks
            ]
        except CorpusError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        return cmd_fuzz(specs, workers=args.workers or config.fuzz_workers, output=args.format)

    try:
        expression = read_expression(args.expr)
    except OSError as e:
        print(f"error: cannot read {args.expr}: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.command in ('analyze', 'reduce'):
        return cmd_analyze(expression, args.vars, args.format)
    if args.command == 'hessian':
        return cmd_hessian(expression, args.vars, args.kind)
    return cmd_gauss(expression, args.vars, args.at)


def main():
    """Main application function"""
    sys.exit(run())


if __name__ == "__main__":
    main()
