"""Command-line front end.

Commands: negate, check, iterate, sweep-alpha, entropy.  Distributions come
from --input (default stdin) either as a JSON document

    {"distributions": [{"label": "pd1", "values": [0, 0.1, 0.2, 0.3, 0.4]}]}

or as bare text, one whitespace/comma-separated distribution per line with
labels auto-generated as pd1, pd2, ...  Reports go to stdout as JSON or CSV
with full-precision numbers (--pretty rounds to 6 significant digits).

Exit status: 0 success, 1 a check failed (report still emitted), 2 parse or
validation failure, 3 descriptor application failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .analysis import (
    DEFAULT_GRID_SIZE,
    DEFAULT_TOLERANCE,
    boundary_range_check,
    contexts_containing,
    distance_to_uniform,
    fixed_point_check,
    functional_equation_check,
    independence_probe,
    iterate_negation,
    linearity_test,
)
from .core import Distribution, entropy, validate_distribution
from .errors import (
    ArgumentError,
    ContextMismatch,
    ContextRequired,
    GeneratorError,
    IndependenceRequired,
    InternalConsistencyError,
    LengthMismatch,
    NegationError,
    NegatorRequired,
)
from .negators import apply_transformation, linear_from_alpha, parse_descriptor

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_APPLICATION = 3

_PROBE_CONTEXTS = 8
_PROBE_VALUE = 0.5

_APPLICATION_ERRORS = (
    GeneratorError,
    InternalConsistencyError,
    ContextRequired,
    ContextMismatch,
    IndependenceRequired,
    NegatorRequired,
)


# ---------------------------------------------------------------------------
# Input / output plumbing
# ---------------------------------------------------------------------------

def _read_input(path: str | None) -> list[tuple[str, list[float]]]:
    text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    if text.lstrip().startswith("{"):
        document = json.loads(text)
        entries = document.get("distributions")
        if not isinstance(entries, list) or not entries:
            raise ValueError("input document needs a non-empty 'distributions' list")
        labelled = []
        for entry in entries:
            label = entry.get("label")
            values = entry.get("values")
            if not isinstance(label, str) or not label:
                raise ValueError(f"distribution entry {entry!r} needs a non-empty 'label'")
            if not isinstance(values, list):
                raise ValueError(f"distribution {label!r} needs a 'values' list")
            labelled.append((label, [float(v) for v in values]))
    else:
        labelled = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            values = [float(token) for token in line.replace(",", " ").split()]
            labelled.append((f"pd{len(labelled) + 1}", values))
        if not labelled:
            raise ValueError("no distributions found on input")
    labels = [label for label, _ in labelled]
    if len(set(labels)) != len(labels):
        raise ValueError("distribution labels must be unique")
    return labelled


def _validated(labelled: list[tuple[str, list[float]]]) -> list[tuple[str, Distribution]]:
    distributions = []
    for label, values in labelled:
        try:
            distributions.append((label, validate_distribution(values)))
        except NegationError as exc:
            raise type(exc)(f"distribution {label!r}: {exc}") from exc
    return distributions


def _rounded(node):
    if isinstance(node, bool):
        return node
    if isinstance(node, float):
        return float(f"{node:.6g}")
    if isinstance(node, dict):
        return {key: _rounded(value) for key, value in node.items()}
    if isinstance(node, (list, tuple)):
        return [_rounded(value) for value in node]
    return node


def _cell(value, pretty: bool) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.6g}" if pretty else f"{value:.17g}"
    return "" if value is None else str(value)


def _emit(args, payload: dict, header: list[str], rows: list[list]) -> None:
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(value, args.pretty) for value in row])
    else:
        document = _rounded(payload) if args.pretty else payload
        print(json.dumps(document, indent=2 if args.pretty else None))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_negate(args) -> int:
    results = []
    rows = []
    for label, dist in _validated(_read_input(args.input)):
        descriptor = parse_descriptor(args.negator, n=len(dist))
        negated = apply_transformation(descriptor, dist)
        before, after = entropy(dist), entropy(negated)
        results.append({
            "label": label,
            "n": len(dist),
            "input": list(dist.values),
            "output": list(negated.values),
            "input_entropy": before,
            "output_entropy": after,
            "entropy_delta": after - before,
        })
        for index, (p, q) in enumerate(zip(dist.values, negated.values), start=1):
            rows.append([label, index, p, q, before, after, after - before])
    payload = {"command": "negate", "results": results}
    header = ["label", "index", "input", "output", "input_entropy", "output_entropy", "entropy_delta"]
    _emit(args, payload, header, rows)
    return EXIT_OK


def cmd_check(args) -> int:
    tolerance = args.tol if args.tol is not None else DEFAULT_TOLERANCE
    descriptor = parse_descriptor(args.negator, n=args.n)
    entries = []
    reports = []

    def include(report):
        reports.append(report)
        entries.append({"skipped": False, **report.to_dict()})

    def skip(name, reason):
        entries.append({"skipped": True, "check_name": name, "reason": reason})

    include(fixed_point_check(descriptor, args.n, grid_size=args.grid, tolerance=tolerance))
    if descriptor.claims_pd_independent:
        include(functional_equation_check(descriptor, args.n, grid_size=args.grid, tolerance=tolerance))
        if descriptor.claims_negator:
            include(boundary_range_check(descriptor, args.n, grid_size=args.grid, tolerance=tolerance))
            verdict = linearity_test(descriptor, args.n, grid_size=args.grid, tolerance=tolerance)
        else:
            skip("boundary-range", "descriptor does not claim to be a negator")
            skip("linearity", "descriptor does not claim to be a negator")
            verdict = None
    else:
        reason = "descriptor does not claim pd-independence"
        skip("functional-equation", reason)
        skip("boundary-range", reason)
        skip("linearity", reason)
        verdict = None
    contexts = contexts_containing(_PROBE_VALUE, args.n, _PROBE_CONTEXTS, args.seed)
    include(independence_probe(descriptor, _PROBE_VALUE, contexts, tolerance=tolerance, seed=args.seed))

    passed = all(report.passed for report in reports)
    payload = {
        "command": "check",
        "negator": descriptor.spec_string(),
        "n": args.n,
        "grid_size": args.grid,
        "seed": args.seed,
        "passed": passed,
        "checks": entries,
        "linearity": None if verdict is None else verdict.to_dict(),
    }
    header = ["check_name", "skipped", "passed", "reason", "grid_size", "tolerance", "violations", "max_magnitude"]
    rows = []
    for entry in entries:
        if entry["skipped"]:
            rows.append([entry["check_name"], True, None, entry["reason"], None, None, None, None])
        else:
            magnitudes = [violation["magnitude"] for violation in entry["violations"]]
            rows.append([
                entry["check_name"], False, entry["passed"], None,
                entry["grid_size"], entry["tolerance"], len(magnitudes),
                max(magnitudes) if magnitudes else 0.0,
            ])
    if verdict is not None:
        rows.append(["linearity", False, verdict.is_linear, None, args.grid, tolerance,
                     None, verdict.max_residual])
    _emit(args, payload, header, rows)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_iterate(args) -> int:
    results = []
    rows = []
    for label, dist in _validated(_read_input(args.input)):
        descriptor = parse_descriptor(args.negator, n=len(dist))
        trace = iterate_negation(descriptor, dist, args.steps)
        steps = []
        for step, (d, distance, h) in enumerate(
            zip(trace.steps, trace.distances_to_uniform, trace.entropies)
        ):
            steps.append({
                "step": step,
                "values": list(d.values),
                "distance_to_uniform": distance,
                "entropy": h,
            })
            for index, value in enumerate(d.values, start=1):
                rows.append([label, step, index, value, distance, h])
        results.append({"label": label, "n": len(dist), "trace": steps})
    payload = {"command": "iterate", "results": results}
    header = ["label", "step", "index", "value", "distance_to_uniform", "entropy"]
    _emit(args, payload, header, rows)
    return EXIT_OK


def cmd_sweep_alpha(args) -> int:
    if args.alphas < 2:
        raise ArgumentError(f"--alphas must be at least 2, got {args.alphas}")
    distributions = _validated(_read_input(args.input))
    if args.n is not None:
        for label, dist in distributions:
            if len(dist) != args.n:
                raise LengthMismatch(f"distribution {label!r} has length {len(dist)}, expected --n {args.n}")
    alphas = [i / (args.alphas - 1) for i in range(args.alphas)]
    results = []
    rows = []
    for alpha in alphas:
        descriptor = linear_from_alpha(alpha)
        for label, dist in distributions:
            negated = apply_transformation(descriptor, dist)
            before, after = entropy(dist), entropy(negated)
            results.append({
                "alpha": alpha,
                "label": label,
                "output": list(negated.values),
                "input_entropy": before,
                "output_entropy": after,
                "entropy_delta": after - before,
            })
            for index, value in enumerate(negated.values, start=1):
                rows.append([alpha, label, index, value, before, after, after - before])
    payload = {"command": "sweep-alpha", "alphas": alphas, "results": results}
    header = ["alpha", "label", "index", "output", "input_entropy", "output_entropy", "entropy_delta"]
    _emit(args, payload, header, rows)
    return EXIT_OK


def cmd_entropy(args) -> int:
    results = []
    rows = []
    for label, dist in _validated(_read_input(args.input)):
        h = entropy(dist)
        results.append({"label": label, "n": len(dist), "entropy": h})
        rows.append([label, len(dist), h])
    payload = {"command": "entropy", "results": results}
    _emit(args, payload, ["label", "n", "entropy"], rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdneg",
        description="Construct, apply and analyse negations of finite probability distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    io_options = argparse.ArgumentParser(add_help=False)
    io_options.add_argument("--input", default=None, metavar="PATH",
                            help="input document (default: stdin)")
    io_options.add_argument("--format", choices=("json", "csv"), default="json")
    io_options.add_argument("--pretty", action="store_true",
                            help="round numbers to 6 significant digits")

    negate = sub.add_parser("negate", parents=[io_options],
                            help="apply a negator to each input distribution")
    negate.add_argument("negator", help="descriptor, e.g. yager or linear:n1=0.1")
    negate.set_defaults(handler=cmd_negate)

    check = sub.add_parser("check", parents=[io_options],
                           help="run the applicable property checks for a descriptor")
    check.add_argument("negator")
    check.add_argument("--n", type=int, required=True, help="distribution length to check at")
    check.add_argument("--grid", type=int, default=DEFAULT_GRID_SIZE, help="grid resolution over [0, 1]")
    check.add_argument("--tol", type=float, default=None, help="override the check tolerance")
    check.add_argument("--seed", type=int, default=0, help="seed for the randomized probe contexts")
    check.set_defaults(handler=cmd_check)

    iterate = sub.add_parser("iterate", parents=[io_options],
                             help="emit the trace of repeated negation")
    iterate.add_argument("negator")
    iterate.add_argument("--steps", type=int, default=10)
    iterate.set_defaults(handler=cmd_iterate)

    sweep = sub.add_parser("sweep-alpha", parents=[io_options],
                           help="apply every linear negator on an alpha grid")
    sweep.add_argument("--alphas", type=int, default=11, help="number of alpha grid points (>= 2)")
    sweep.add_argument("--n", type=int, default=None,
                       help="require every input distribution to have this length")
    sweep.set_defaults(handler=cmd_sweep_alpha)

    entropy_cmd = sub.add_parser("entropy", parents=[io_options],
                                 help="report the entropy of each input distribution")
    entropy_cmd.set_defaults(handler=cmd_entropy)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _APPLICATION_ERRORS as exc:
        print(f"pdneg: {exc}", file=sys.stderr)
        return EXIT_APPLICATION
    except (NegationError, ValueError, OSError) as exc:
        print(f"pdneg: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())
