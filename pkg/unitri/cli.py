#!/usr/bin/env python3
"""
unitri CLI - Command-line interface to u_n arithmetic and the monomorphism verifier.

Exit codes:
    0  success, check passed, or certified verdict
    1  rejected verdict, failed check, or a computation that cannot be completed
    2  malformed input (syntax, schema, triangularity, mismatched n, missing file)
"""

import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from . import __version__
from .algebra.automorphism import act_on_derivation
from .algebra.derivation import DEFAULT_NILPOTENCY_CAP, bracket, exp_ad, ideal_index
from .algebra.endomorphism import (
    check_homomorphism,
    check_injectivity,
    endo_from_automorphism,
    endo_from_exp_ad,
    extract_generators,
    homomorphism_coverage,
)
from .algebra.filtration import derived_length, dimension, enumerate_basis
from .algebra.normalizer import normalize
from .algebra.sampling import random_automorphism
from .engine.runner import verify_theorem
from .errors import (
    AmbientMismatchError,
    FiltrationNotPreservedError,
    GeneratorError,
    GrammarError,
    NilpotencyCapExceeded,
    OutsideFiltrationError,
    SchemaError,
    SolverError,
    TriangularityError,
)
from .formats.grammar import format_automorphism, max_index, parse_derivation, parse_polynomial
from .formats.parser import EndoParser, SpannersParser, dump_endo, load_automorphism

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_MALFORMED = 2

INPUT_ERRORS = (GrammarError, SchemaError, TriangularityError, AmbientMismatchError, FileNotFoundError)
SEMANTIC_ERRORS = (
    NilpotencyCapExceeded,
    SolverError,
    OutsideFiltrationError,
    FiltrationNotPreservedError,
    GeneratorError,
)


def _common_n(texts: Sequence[str], n: Optional[int]) -> int:
    """n from --n, else the largest index across all expressions."""
    if n is not None:
        return n
    return max([1] + [max_index(t) for t in texts])


def _write_or_print(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_bracket(args: argparse.Namespace) -> int:
    n = _common_n([args.left, args.right], args.n)
    print(bracket(parse_derivation(args.left, n), parse_derivation(args.right, n)))
    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    n = _common_n([args.derivation, args.polynomial], args.n)
    D = parse_derivation(args.derivation, n)
    print(D(parse_polynomial(args.polynomial, n)))
    return EXIT_OK


def cmd_exp_ad(args: argparse.Namespace) -> int:
    n = _common_n([args.g, args.derivation], args.n)
    print(exp_ad(parse_derivation(args.g, n), parse_derivation(args.derivation, n), args.cap))
    return EXIT_OK


def cmd_act(args: argparse.Namespace) -> int:
    sigma = load_automorphism(Path(args.sigma), args.n)
    print(act_on_derivation(sigma, parse_derivation(args.derivation, sigma.n)))
    return EXIT_OK


def cmd_ideal_index(args: argparse.Namespace) -> int:
    n = _common_n([args.derivation], args.n)
    print(ideal_index(parse_derivation(args.derivation, n)))
    return EXIT_OK


def cmd_dim_n(args: argparse.Namespace) -> int:
    if args.n < 1 or args.d < 0:
        raise ValueError("dim-n needs n >= 1 and d >= 0")
    print(dimension(args.n, args.d))
    return EXIT_OK


def cmd_basis(args: argparse.Namespace) -> int:
    basis = enumerate_basis(args.n, args.d)
    for index, element in zip(basis.elements, basis.derivations()):
        print(f"{index}\t{element}")
    return EXIT_OK


def cmd_derived_length(args: argparse.Namespace) -> int:
    S = SpannersParser().parse(Path(args.spanners), args.n)
    budget = args.budget if args.budget is not None else S.max_level()
    print(derived_length(S, budget))
    return EXIT_OK


def cmd_make_endo(args: argparse.Namespace) -> int:
    if args.sigma:
        phi = endo_from_automorphism(load_automorphism(Path(args.sigma), args.n), args.level)
    elif args.exp_ad:
        n = _common_n([args.exp_ad], args.n)
        phi = endo_from_exp_ad(parse_derivation(args.exp_ad, n), args.level, args.cap)
    else:
        if args.n is None:
            raise ValueError("--random-sigma needs --n")
        rng = random.Random(args.seed)
        sigma = random_automorphism(rng, args.n, tail_degree=args.tail_degree)
        logging.getLogger(__name__).debug("random sigma: %s", sigma)
        phi = endo_from_automorphism(sigma, args.level)
    _write_or_print(dump_endo(phi), args.output)
    return EXIT_OK


def cmd_check_endo(args: argparse.Namespace) -> int:
    phi = EndoParser().parse(Path(args.endo))
    checked, unchecked = homomorphism_coverage(phi)
    violation = check_homomorphism(phi)
    if violation is None:
        print(f"Homomorphism: ok ({checked} pairs checked, {unchecked} unchecked)")
    else:
        print(f"Homomorphism: violated {violation}")

    top = check_injectivity(phi, phi.level)
    print(f"Injective: {'yes' if top else 'no'} on N_{phi.level}")

    try:
        lambdas = [str(g.scalar) for g in extract_generators(phi)]
        print(f"lambda: ({', '.join(lambdas)})")
    except GeneratorError as e:
        print(f"Generators: {e}")

    return EXIT_OK if violation is None and top else EXIT_REJECTED


def cmd_normalize(args: argparse.Namespace) -> int:
    phi = EndoParser().parse(Path(args.endo))
    sigma, psi = normalize(phi)
    print(format_automorphism(sigma), end="")
    if args.output:
        Path(args.output).write_text(dump_endo(psi))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    phi = EndoParser().parse(Path(args.endo))
    if args.budget is not None and not 0 <= args.budget <= phi.level:
        raise ValueError(f"--budget must be in 0..{phi.level}")

    report = verify_theorem(phi, args.budget, verbose=args.verbose)
    data = report.to_dict()

    if args.output:
        Path(args.output).write_text(json.dumps(data, indent=2))
        if args.verbose:
            print(f"Report saved to: {args.output}")

    print(json.dumps(data, indent=2) if args.json else report.to_table())
    return EXIT_OK if report.certified else EXIT_REJECTED


def cmd_version(args: argparse.Namespace) -> int:
    print(f"unitri version {__version__}")
    return EXIT_OK


def _add_n(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None, help="Variable count (inferred when omitted)")


def build_parser() -> argparse.ArgumentParser:
    """The argument parser, one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="unitri",
        description="unitri - exact arithmetic in u_n and verification of its monomorphisms",
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    p = subparsers.add_parser("bracket", help="Lie bracket [D, E]")
    p.add_argument("left")
    p.add_argument("right")
    _add_n(p)
    p.set_defaults(func=cmd_bracket)

    p = subparsers.add_parser("apply", help="Apply a derivation to a polynomial")
    p.add_argument("derivation")
    p.add_argument("polynomial")
    _add_n(p)
    p.set_defaults(func=cmd_apply)

    p = subparsers.add_parser("exp-ad", help="e^{ad(g)}(D)")
    p.add_argument("g")
    p.add_argument("derivation")
    p.add_argument("--cap", type=int, default=DEFAULT_NILPOTENCY_CAP, help="Nilpotency cap")
    _add_n(p)
    p.set_defaults(func=cmd_exp_ad)

    p = subparsers.add_parser("act", help="sigma . D for sigma read from a file")
    p.add_argument("derivation")
    p.add_argument("--sigma", required=True, help="Automorphism file")
    _add_n(p)
    p.set_defaults(func=cmd_act)

    p = subparsers.add_parser("ideal-index", help="Largest i with D in u_{n,i}")
    p.add_argument("derivation")
    _add_n(p)
    p.set_defaults(func=cmd_ideal_index)

    p = subparsers.add_parser("dim-n", help="Dimension of N_d in u_n")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_dim_n)

    p = subparsers.add_parser("basis", help="Monomial basis of N_d")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_basis)

    p = subparsers.add_parser("derived-length", help="Derived length of a spanned subalgebra")
    p.add_argument("--spanners", required=True, help="Spanners YAML file")
    p.add_argument("--budget", type=int, default=None, help="Filtration level bounding the spanners")
    _add_n(p)
    p.set_defaults(func=cmd_derived_length)

    p = subparsers.add_parser("make-endo", help="Write an endomorphism file")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--sigma", help="Automorphism file")
    source.add_argument("--exp-ad", dest="exp_ad", help="Derivation g for e^{ad(g)}")
    source.add_argument("--random-sigma", action="store_true", help="Seeded random sigma")
    p.add_argument("--level", type=int, required=True, help="Domain level d")
    p.add_argument("--seed", type=int, default=0, help="Random seed")
    p.add_argument("--tail-degree", type=int, default=3, help="Tail degree for --random-sigma")
    p.add_argument("--cap", type=int, default=DEFAULT_NILPOTENCY_CAP, help="Nilpotency cap")
    p.add_argument("--output", "-o", default=None, help="Output file (default: stdout)")
    _add_n(p)
    p.set_defaults(func=cmd_make_endo)

    p = subparsers.add_parser("check-endo", help="Homomorphism, injectivity and generator checks")
    p.add_argument("--endo", required=True, help="Endomorphism file")
    p.set_defaults(func=cmd_check_endo)

    p = subparsers.add_parser("normalize", help="Construct sigma and psi = sigma^{-1} . phi")
    p.add_argument("--endo", required=True, help="Endomorphism file")
    p.add_argument("--output", "-o", default=None, help="Write psi to this file")
    p.set_defaults(func=cmd_normalize)

    p = subparsers.add_parser("verify", help="Run the verification pipeline")
    p.add_argument("--endo", required=True, help="Endomorphism file")
    p.add_argument("--budget", type=int, default=None, help="Highest level for the rank table")
    p.add_argument("--json", action="store_true", help="Print the report as JSON")
    p.add_argument("--output", "-o", default=None, help="Also save the JSON report here")
    p.add_argument("--verbose", "-v", action="store_true", help="Print pipeline progress")
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser("version", help="Show version")
    p.set_defaults(func=cmd_version)

    return parser


def _dispatch(func: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    try:
        return func(args)
    except INPUT_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except SEMANTIC_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_REJECTED
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_MALFORMED


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the unitri CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING)

    if not args.command:
        parser.print_help()
        return EXIT_MALFORMED

    return _dispatch(args.func, args)


if __name__ == "__main__":
    sys.exit(main())
