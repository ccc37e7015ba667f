"""
Command-line front end.

    schubert-hs pieri --h 1 --mono 1,3
    schubert-hs product --k 2 --n 4 --lhs 1 --rhs 1
    schubert-hs intersect --k 2 --n 4 --classes "1;1;1;1"
    schubert-hs gw --k 2 --n 4 --classes "2;1,1;2,2" --degree 1
    schubert-hs giambelli --mono 2,5
    schubert-hs verify pieri-vs-leibniz --max-k 3 --max-index 8 --max-h 4
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.analyzers.derivation import (
    GrassContext,
    d_h_pieri,
    project_pn,
    quantum_dh_element,
)
from src.analyzers.schubert import (
    Convention,
    element_to_classes,
    giambelli_operator,
    giambelli_solve,
    gw_number,
    intersection_number,
    schubert_product,
)
from src.config import configure_logging, get_output_setting, get_verify_setting
from src.core.monitoring import monitoring, track_operation
from src.core.verification import SUITES, run_suite
from src.exceptions import (
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_TIMEOUT,
    EXIT_VERIFY_FAILED,
    ParseError,
    SchubertError,
)
from src.models.multivector import (
    Element,
    Monomial,
    partition_to_monomial,
    validate_monomial,
)
from src.models.partition import Partition
from src.reporting.render import (
    Renderer,
    dumps,
    element_to_json,
    operator_poly_to_json,
    product_to_json,
)

logger = logging.getLogger(__name__)

# suite -> (keyword argument, settings key or literal default)
# flags share the keyword name
SWEEP_BOUNDS: List[Tuple[str, Union[str, int]]] = [
    ('max_k', 'MAX_K'),
    ('max_index', 'MAX_INDEX'),
    ('max_h', 'MAX_H'),
]
SUITE_PARAMETERS: Dict[str, List[Tuple[str, Union[str, int]]]] = {
    'pieri-vs-leibniz': SWEEP_BOUNDS,
    'prefix': SWEEP_BOUNDS,
    'hs-axiom': [('cases', 'RANDOM_CASES'), ('seed', 'SEED')],
    'commutativity': [('cases', 'RANDOM_CASES'), ('seed', 'SEED')],
    'giambelli': [('max_part', 'MAX_PART'), ('k', 'MAX_K')],
    'lr': [('k', 2), ('n', 5)],
    'duality': [('k', 2), ('n', 5)],
    'null-map': [('k', 2), ('n', 4)],
    'sigma1-powers': [('k', 2), ('n', 4)],
    'quantum': [('k', 2), ('n', 4)],
}


def parse_partition(text: str) -> Partition:
    """'2,1' -> (2,1); the empty string is the unit class."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(part) for part in text.split(','))
    except ValueError as e:
        raise ParseError(f"Invalid partition '{text}': {str(e)}")


def parse_monomial(text: str) -> Monomial:
    """'1,3' -> (1, 3); indices must be positive and strictly increasing."""
    text = text.strip()
    if not text:
        return ()
    try:
        return validate_monomial([int(i) for i in text.split(',')])
    except ValueError as e:
        raise ParseError(f"Invalid monomial '{text}': {str(e)}")


def parse_classes(text: str) -> List[Partition]:
    """'1;1,1;2' -> [(1), (1,1), (2)]."""
    return [parse_partition(piece) for piece in text.split(';')]


def _renderer(args: argparse.Namespace) -> Renderer:
    return Renderer(unicode=args.unicode, width=get_output_setting('OUTPUT_WIDTH'))


def _convention(args: argparse.Namespace) -> Convention:
    return Convention(args.convention or get_output_setting('DEFAULT_CONVENTION'))


@track_operation('pieri')
def cmd_pieri(args: argparse.Namespace) -> int:
    """Print D_h of a monomial, unprojected, projected by p_n or q-reduced."""
    if args.h < 0:
        raise SchubertError(f"--h must be non-negative, got {args.h}")
    if args.mono is not None:
        monomial = parse_monomial(args.mono)
        if args.k is not None and args.k != len(monomial):
            raise SchubertError(
                f"--k {args.k} disagrees with the arity {len(monomial)} of {monomial}"
            )
    else:
        if args.k is None:
            raise SchubertError("--partition needs --k to choose the exterior power")
        partition = parse_partition(args.partition)
        if len(partition) > args.k:
            raise SchubertError(
                f"Partition {partition} has more than k={args.k} parts"
            )
        monomial = partition_to_monomial(partition, args.k)
    ctx = GrassContext(len(monomial), args.n) if args.n is not None else None

    if args.quantum:
        if ctx is None:
            raise SchubertError("--quantum needs a Grassmannian: pass --n")
        result = quantum_dh_element(ctx, args.h, Element.monomial(monomial))
        if _convention(args) is Convention.BERTRAM:
            sign = (-1) ** (ctx.k - 1)
            result = result.map_coefficients(lambda c: c.twist(sign))
    elif ctx is not None:
        ctx.check_element(Element.monomial(monomial))
        result = project_pn(ctx, d_h_pieri(args.h, monomial))
    else:
        result = d_h_pieri(args.h, monomial)

    classes = element_to_classes(result)
    if args.json:
        doc = {'element': element_to_json(result), 'classes': product_to_json(classes)}
        print(dumps(doc))
    else:
        renderer = _renderer(args)
        print(renderer.element(result))
        print(renderer.classes(classes, explicit_unit=True))
    return EXIT_OK


@track_operation('product')
def cmd_product(args: argparse.Namespace) -> int:
    """Print the classical or quantum product of two classes."""
    ctx = GrassContext(args.k, args.n)
    coeffs = schubert_product(
        ctx,
        parse_partition(args.lhs),
        parse_partition(args.rhs),
        quantum=args.quantum,
        convention=_convention(args),
    )
    if args.json:
        print(dumps(product_to_json(coeffs)))
    else:
        print(_renderer(args).classes(coeffs))
    return EXIT_OK


@track_operation('intersect')
def cmd_intersect(args: argparse.Namespace) -> int:
    ctx = GrassContext(args.k, args.n)
    value = intersection_number(ctx, parse_classes(args.classes))
    print(dumps({'value': str(value)}) if args.json else value)
    return EXIT_OK


@track_operation('gw')
def cmd_gw(args: argparse.Namespace) -> int:
    ctx = GrassContext(args.k, args.n)
    value = gw_number(ctx, parse_classes(args.classes), args.degree)
    print(dumps({'value': str(value)}) if args.json else value)
    return EXIT_OK


@track_operation('giambelli')
def cmd_giambelli(args: argparse.Namespace) -> int:
    """Print the Giambelli operator polynomial of a monomial or partition."""
    if args.mono is not None:
        poly = giambelli_solve(parse_monomial(args.mono))
    else:
        if args.k is None:
            raise SchubertError("--partition needs --k to size the determinant")
        poly = giambelli_operator(parse_partition(args.partition), args.k)
    if args.json:
        print(dumps(operator_poly_to_json(poly)))
    else:
        print(_renderer(args).operator(poly))
    return EXIT_OK


def suite_arguments(suite: str, args: argparse.Namespace) -> Dict[str, Any]:
    """Keyword arguments for a sweep; explicit flags win over configured defaults."""
    params: Dict[str, Any] = {}
    for keyword, default in SUITE_PARAMETERS[suite]:
        value = getattr(args, keyword, None)
        if value is None:
            value = get_verify_setting(default) if isinstance(default, str) else default
        params[keyword] = value
    return params


def cmd_verify(args: argparse.Namespace) -> int:
    """Run a sweep; the exit status is non-zero when any case fails."""
    params = suite_arguments(args.suite, args)
    report = run_suite(args.suite, seconds=args.timeout, **params)
    if args.json:
        print(dumps(report.to_dict()))
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _source_group(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        '--mono', help="comma-separated strictly increasing indices, e.g. 2,5"
    )
    group.add_argument(
        '--partition', help="comma-separated parts, empty for the unit class"
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="machine-readable output")
    common.add_argument(
        '--unicode', action='store_true', help="render with ε, σ, ∧ and ·"
    )
    common.add_argument(
        '-v', '--verbose', action='count', default=0, help="-v info, -vv debug"
    )
    common.add_argument(
        '--metrics', action='store_true', help="print operation metrics to stderr"
    )

    parser = argparse.ArgumentParser(
        prog='schubert-hs',
        description="Schubert calculus through derivations on exterior algebras",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    pieri = subparsers.add_parser('pieri', parents=[common], help="D_h on a monomial")
    pieri.add_argument('--h', type=int, required=True)
    _source_group(pieri)
    pieri.add_argument('--k', type=int)
    pieri.add_argument('--n', type=int)
    pieri.add_argument('--quantum', action='store_true')
    pieri.add_argument('--convention', choices=[c.value for c in Convention])
    pieri.set_defaults(handler=cmd_pieri)

    product = subparsers.add_parser(
        'product', parents=[common], help="product of two Schubert classes"
    )
    product.add_argument('--k', type=int, required=True)
    product.add_argument('--n', type=int, required=True)
    product.add_argument('--lhs', required=True)
    product.add_argument('--rhs', required=True)
    product.add_argument('--quantum', action='store_true')
    product.add_argument('--convention', choices=[c.value for c in Convention])
    product.set_defaults(handler=cmd_product)

    intersect = subparsers.add_parser(
        'intersect', parents=[common], help="intersection number"
    )
    intersect.add_argument('--k', type=int, required=True)
    intersect.add_argument('--n', type=int, required=True)
    intersect.add_argument(
        '--classes', required=True, help="semicolon-separated partitions"
    )
    intersect.set_defaults(handler=cmd_intersect)

    gw = subparsers.add_parser(
        'gw', parents=[common], help="degree-d Gromov-Witten number"
    )
    gw.add_argument('--k', type=int, required=True)
    gw.add_argument('--n', type=int, required=True)
    gw.add_argument(
        '--classes', required=True, help="semicolon-separated partitions"
    )
    gw.add_argument('--degree', type=int, required=True)
    gw.set_defaults(handler=cmd_gw)

    giambelli = subparsers.add_parser(
        'giambelli', parents=[common], help="Giambelli operator polynomial"
    )
    _source_group(giambelli)
    giambelli.add_argument('--k', type=int)
    giambelli.set_defaults(handler=cmd_giambelli)

    verify = subparsers.add_parser(
        'verify', parents=[common], help="run a verification sweep"
    )
    verify.add_argument('suite', choices=list(SUITES))
    verify.add_argument('--max-k', dest='max_k', type=int)
    verify.add_argument('--max-index', dest='max_index', type=int)
    verify.add_argument('--max-h', dest='max_h', type=int)
    verify.add_argument('--max-part', dest='max_part', type=int)
    verify.add_argument('--k', type=int)
    verify.add_argument('--n', type=int)
    verify.add_argument('--cases', type=int)
    verify.add_argument('--seed', type=int)
    verify.add_argument('--timeout', type=int, help="seconds; 0 disables")
    verify.set_defaults(handler=cmd_verify)

    return parser


def _log_level(verbosity: int) -> int:
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    return logging.WARNING


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE_ERROR if e.code else EXIT_OK
    configure_logging(_log_level(args.verbose))

    status: int
    try:
        status = args.handler(args)
    except SchubertError as e:
        logger.warning(f"{args.command} rejected its input: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        status = e.exit_status
    except TimeoutError as e:
        print(f"error: {str(e)}", file=sys.stderr)
        status = EXIT_TIMEOUT

    if args.metrics:
        print(monitoring.exposition(), file=sys.stderr)
    return status


if __name__ == '__main__':
    sys.exit(main())
