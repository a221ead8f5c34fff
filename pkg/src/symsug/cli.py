"""Command line: compute integrals from a problem file, run the law
suites, or print the ordinal transforms of a capacity.

Output is line-delimited JSON, one record per result, in a fixed order;
identical inputs (and seed) produce byte-identical output.  Exit codes:
0 success, 1 malformed input document, 2 invalid flags or an instance
that fails validation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .capacity import CapacityError
from .integrals import (
    choquet,
    choquet_asymmetric,
    choquet_symmetric,
    sugeno,
    sugeno_symmetric,
    sugeno_variant1,
    sugeno_variant2,
    sugeno_variant3,
    ranked_terms,
    to_real_capacity,
    to_real_profile,
    variant1_terms,
    variant3_terms,
)
from .io import (
    MOBIUS_REPRESENTATIVES,
    OUTPUT_NAMES,
    ParseError,
    Problem,
    fraction_text,
    read_problem,
    record_line,
    set_function_record,
)
from .mobius import canonical_ordinal_mobius, ordinal_mobius_interval
from .rules import Rule
from .scale import ScaleError
from .verify import VerifyConfig, law_names, run_laws

CHOQUET_FAMILY = ("choquet", "choquet_sym", "choquet_asym")
NONNEGATIVE_ONLY = ("choquet", "sugeno")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 after --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ScaleError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsug",
        description=(
            "Integrals over symmetric ordinal scales: compute them from a "
            "problem file, verify their algebraic laws, or print ordinal "
            "transforms."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser(
        "compute", help="evaluate integrals and transforms from a problem file"
    )
    compute.add_argument("--input", required=True, help="problem file (JSON)")
    compute.add_argument(
        "--rule",
        choices=[rule.value for rule in Rule],
        help=(
            "fold disambiguation rule; accepted for forward compatibility, "
            "the defined outputs each fix their own rule"
        ),
    )
    compute.add_argument(
        "--mobius",
        choices=list(MOBIUS_REPRESENTATIVES),
        help="transform representative used by v1 (default: lower)",
    )
    which = compute.add_mutually_exclusive_group(required=False)
    which.add_argument(
        "--all",
        action="store_true",
        help="emit every output applicable to the instance",
    )
    which.add_argument(
        "--only",
        metavar="LIST",
        help=f"comma-separated output names among: {', '.join(OUTPUT_NAMES)}",
    )
    compute.set_defaults(handler=_cmd_compute)

    verify = commands.add_parser(
        "verify", help="run the algebraic law suites and report per law"
    )
    verify.add_argument("--n", type=int, default=2, help="number of players")
    verify.add_argument(
        "--levels", type=int, default=3, help="grade count K of the levels scale"
    )
    mode = verify.add_mutually_exclusive_group(required=False)
    mode.add_argument(
        "--exhaustive",
        action="store_true",
        help="enumerate every instance (requires --n at most 3)",
    )
    mode.add_argument(
        "--samples", type=int, help="check this many seeded random instances"
    )
    verify.add_argument("--seed", type=int, default=0, help="sampling seed")
    verify.add_argument(
        "--law", action="append", help="run only this law (repeatable)"
    )
    verify.set_defaults(handler=_cmd_verify)

    mobius = commands.add_parser(
        "mobius", help="print the ordinal transform interval and canonical forms"
    )
    mobius.add_argument("--input", required=True, help="problem file (JSON)")
    mobius.set_defaults(handler=_cmd_mobius)

    return parser


# -- compute ---------------------------------------------------------------


def _applicable_outputs(problem: Problem) -> list[str]:
    names = []
    on_unit = problem.scale.kind == "unit"
    nonnegative = problem.profile.is_nonnegative
    for name in OUTPUT_NAMES:
        if name in CHOQUET_FAMILY and not on_unit:
            continue
        if name in NONNEGATIVE_ONLY and not nonnegative:
            continue
        names.append(name)
    return names


def _requested_outputs(problem: Problem, args) -> list[str]:
    if args.only is not None:
        requested = [name.strip() for name in args.only.split(",")]
        if not all(requested):
            raise ValueError("--only lists an empty output name")
        unknown = [name for name in requested if name not in OUTPUT_NAMES]
        if unknown:
            raise ValueError(f"unknown output name: {unknown[0]!r}")
        if len(set(requested)) != len(requested):
            raise ValueError("--only repeats an output name")
    elif args.all:
        return _applicable_outputs(problem)
    elif problem.options.outputs is not None:
        requested = list(problem.options.outputs)
    else:
        raise ValueError(
            "pass --all or --only LIST (or set options.outputs in the file)"
        )
    on_unit = problem.scale.kind == "unit"
    nonnegative = problem.profile.is_nonnegative
    for name in requested:
        if name in CHOQUET_FAMILY and not on_unit:
            raise ScaleError(f"{name} needs the unit scale")
        if name in NONNEGATIVE_ONLY and not nonnegative:
            raise ValueError(f"{name} needs a nonnegative profile")
    # canonical emission order, independent of request order
    return [name for name in OUTPUT_NAMES if name in requested]


def _cmd_compute(args) -> int:
    problem = read_problem(args.input)
    names = _requested_outputs(problem, args)
    representative = args.mobius or problem.options.mobius or "lower"

    v, f = problem.capacity, problem.profile
    interval = ordinal_mobius_interval(v)
    member = interval.lower if representative == "lower" else interval.upper

    outputs: dict[str, object] = {}
    for name in names:
        if name == "choquet":
            outputs[name] = fraction_text(
                choquet(to_real_capacity(v), to_real_profile(f))
            )
        elif name == "choquet_sym":
            outputs[name] = fraction_text(
                choquet_symmetric(to_real_capacity(v), to_real_profile(f))
            )
        elif name == "choquet_asym":
            outputs[name] = fraction_text(
                choquet_asymmetric(to_real_capacity(v), to_real_profile(f))
            )
        elif name == "sugeno":
            outputs[name] = str(sugeno(v, f))
        elif name == "sugeno_sym":
            outputs[name] = str(sugeno_symmetric(v, f))
        elif name == "v1":
            outputs[name] = str(sugeno_variant1(member, f))
        elif name == "v2":
            outputs[name] = str(sugeno_variant2(v, f))
        elif name == "v3":
            outputs[name] = str(sugeno_variant3(v, f))
        elif name == "mobius_interval":
            outputs[name] = {
                "lower": set_function_record(interval.lower),
                "upper": set_function_record(interval.upper),
            }

    order, split, terms = ranked_terms(v, f)
    diagnostics: dict[str, object] = {"order": order, "p": split}
    term_map: dict[str, list[str]] = {}
    term_texts = [str(t) for t in terms]
    for name in ("sugeno_sym", "v2"):
        if name in names:
            term_map[name] = term_texts
    if "v3" in names:
        term_map["v3"] = [str(t) for t in variant3_terms(v, f)]
    if "v1" in names:
        term_map["v1"] = [str(t) for t in variant1_terms(member, f)]
        diagnostics["mobius"] = representative
    if term_map:
        diagnostics["terms"] = term_map

    record: dict[str, object] = dict(outputs)
    record["diagnostics"] = diagnostics
    print(record_line(record))
    return 0


# -- verify ------------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be at least 1")
    if args.levels < 1:
        raise ValueError("--levels must be at least 1")
    exhaustive = args.samples is None
    if exhaustive and args.n > 3:
        raise ValueError("exhaustive mode needs --n at most 3; pass --samples")
    if not exhaustive and args.samples < 1:
        raise ValueError("--samples must be positive")
    config = VerifyConfig(
        n=args.n,
        levels=args.levels,
        exhaustive=exhaustive,
        samples=args.samples if args.samples is not None else 500,
        seed=args.seed,
    )
    names = None
    if args.law:
        unknown = [name for name in args.law if name not in law_names()]
        if unknown:
            raise ValueError(
                f"unknown law: {unknown[0]!r} (see --help for the list)"
            )
        names = args.law
    for result in run_laws(config, names):
        print(record_line(result.to_record()))
    return 0


# -- mobius ------------------------------------------------------------------


def _cmd_mobius(args) -> int:
    problem = read_problem(args.input)
    interval = ordinal_mobius_interval(problem.capacity)
    print(
        record_line(
            {
                "transform": "interval",
                "lower": set_function_record(interval.lower),
                "upper": set_function_record(interval.upper),
            }
        )
    )
    for rule in (Rule.FLOOR, Rule.ANGLE):
        canonical = canonical_ordinal_mobius(problem.capacity, rule)
        print(
            record_line(
                {
                    "transform": "canonical",
                    "rule": rule.value,
                    "table": set_function_record(canonical),
                }
            )
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
