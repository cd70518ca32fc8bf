"""Command-line driver.

Subcommands build complexes from fixtures or JSON files, run the library
computations, and emit deterministic reports (JSON by default, a table
behind --format, optional figures next to the report).  Exit codes: 0 on
success, 1 when a verification check fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .category import categorify
from .checks import run_checks
from .complexes import (
    Complex,
    ContractViolation,
    OrderedComplex,
    is_ordered,
    standard,
    product,
)
from .comonad import chain_count, comonad_level
from .homology import homology
from .mapping import mapping_space, mapping_space_truncated
from . import serialize


class UsageError(Exception):
    pass


def _load_complex(args) -> tuple[Complex, dict]:
    if bool(args.fixture) == bool(args.input):
        raise UsageError("exactly one of --fixture and --input is required")
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as err:
            raise UsageError(f"cannot read complex from {args.input}: {err}")
        return serialize.complex_from_json(data), data
    name, _, params = args.fixture.partition(":")
    values = [int(p) for p in params.split(":") if p] if params else []
    if name == "cube":
        (k,) = values or [1]
        if not 1 <= k <= 3:
            raise UsageError("cube fixture supports 1 to 3 factors")
        cx: Complex = standard("simplex", 1)
        for _ in range(k - 1):
            cx = product(cx, standard("simplex", 1))
        return cx, {"fixture": args.fixture}
    try:
        return standard(name, *values), {"fixture": args.fixture}
    except (ContractViolation, TypeError) as err:
        raise UsageError(f"bad fixture {args.fixture!r}: {err}")


def _endpoints(args, cx: Complex) -> tuple[int, int]:
    if args.source is None or args.target is None:
        raise UsageError("--from and --to are required")
    if not (0 <= args.source < cx.vertex_count and 0 <= args.target < cx.vertex_count):
        raise UsageError(f"endpoints must lie in 0..{cx.vertex_count - 1}")
    return args.source, args.target


def _emit(args, report: dict) -> None:
    text = serialize.as_table(report) if args.format == "table" else serialize.dumps(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_mapping_space(args) -> int:
    cx, source_json = _load_complex(args)
    a, b = _endpoints(args, cx)
    if isinstance(cx, OrderedComplex):
        space = mapping_space(cx, a, b)
    else:
        verdict = is_ordered(cx)
        if not verdict.ok and args.bound is None:
            raise UsageError(
                "input complex is not ordered "
                f"(witness: {verdict.cycle or verdict.pair}); "
                "pass --bound to truncate the enumeration by necklace size")
        space = mapping_space_truncated(cx, a, b, args.bound or cx.vertex_count + 1)
    report = serialize.mapping_space_report(space, source_json)
    _emit(args, report)
    if args.figure:
        from .plotting import save_mapping_space_figure
        save_mapping_space_figure(report, args.figure)
    return 0


def cmd_homology(args) -> int:
    cx, source_json = _load_complex(args)
    if args.source is not None or args.target is not None:
        a, b = _endpoints(args, cx)
        if not isinstance(cx, OrderedComplex):
            raise UsageError("mapping-space homology needs an ordered complex")
        subject = mapping_space(cx, a, b)
        target = f"mapping space ({a},{b})"
    else:
        subject, target = cx, "complex"
    result = homology(subject, args.dmax)
    report = serialize.homology_report(result, target, source_json)
    _emit(args, report)
    if args.figure:
        from .plotting import save_homology_figure
        save_homology_figure(report, args.figure)
    return 0


def cmd_categorify(args) -> int:
    cx, _ = _load_complex(args)
    if not isinstance(cx, OrderedComplex):
        verdict = is_ordered(cx)
        raise UsageError(f"categorify needs an ordered complex "
                         f"(witness: {verdict.cycle or verdict.pair})")
    _emit(args, serialize.categorify_report(categorify(cx)))
    return 0


def cmd_oracle(args) -> int:
    n = args.nmax if args.nmax is not None else 3
    lmax = args.bound if args.bound is not None else 2
    rows = []
    try:
        for level in range(lmax + 1):
            for i in range(n + 1):
                for j in range(i, n + 1):
                    got = comonad_level(n, level, i, j).count
                    expected = 1 if i == j else chain_count(j - i - 1, level)
                    rows.append({"n": n, "level": level, "i": i, "j": j,
                                 "comonad": got, "chains": expected,
                                 "equal": got == expected})
    except ContractViolation as err:
        raise UsageError(str(err))
    report = serialize.oracle_report(rows)
    _emit(args, report)
    return 0 if report["all_equal"] else 1


def cmd_verify(args) -> int:
    only = args.only.split(",") if args.only else None
    try:
        results = run_checks(only)
    except KeyError as err:
        raise UsageError(str(err))
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] {result.name} ({result.seconds:.2f}s): {result.details}",
              file=sys.stderr)
    if args.output or args.format == "json":
        _emit(args, serialize.verify_report(results))
    return 0 if all(r.passed for r in results) else 1


def _add_complex_options(parser: argparse.ArgumentParser, endpoints: bool):
    parser.add_argument("--fixture", help="named fixture, e.g. simplex:3, boundary:4, "
                                          "horn:3:1, loop, two_triangles, cube:2")
    parser.add_argument("--input", help="path to a complex JSON file")
    if endpoints:
        parser.add_argument("--from", dest="source", type=int, help="source vertex")
        parser.add_argument("--to", dest="target", type=int, help="target vertex")
    parser.add_argument("--output", "-o", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=["json", "table"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigidify",
        description="mapping spaces and category structure of rigidified "
                    "finite simplicial sets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mapping-space", help="enumerate a mapping space")
    _add_complex_options(p, endpoints=True)
    p.add_argument("--bound", type=int, help="necklace size bound for "
                                             "non-ordered inputs (marks report truncated)")
    p.add_argument("--figure", help="also render the 1-skeleton to this image file")
    p.set_defaults(fn=cmd_mapping_space)

    p = sub.add_parser("homology", help="integral homology of a complex or mapping space")
    _add_complex_options(p, endpoints=True)
    p.add_argument("--dmax", type=int, help="top homology dimension")
    p.add_argument("--figure", help="also render rank bars to this image file")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("categorify", help="full simplicial category of an ordered complex")
    _add_complex_options(p, endpoints=False)
    p.set_defaults(fn=cmd_categorify)

    p = sub.add_parser("oracle", help="comonad levels against subset-chain counts")
    p.add_argument("--nmax", type=int, help="underlying linear order size (default 3)")
    p.add_argument("--bound", type=int, help="top comonad level (default 2)")
    p.add_argument("--output", "-o")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--only", help="comma-separated suite names")
    p.add_argument("--output", "-o")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ContractViolation as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
