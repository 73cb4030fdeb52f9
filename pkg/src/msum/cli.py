"""Command-line front end.

Commands: classify, close, multisums, detect-linear, schmerl, census.
Exit codes: 0 success; 1 negative mathematical outcome (not linear within
the horizon, hypothesis conditions violated) with a diagnostic payload;
2 usage or input error; 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census as census_mod
from .closure import multisum_closure, sum_closure
from .construction import SequencePrefix, extract_modulus
from .errors import (
    ConditionError,
    ParameterError,
    ResourceLimitError,
    SetFormatError,
    WitnessError,
)
from .intset import IntSet, classify, multisums, strict_multisums, sums
from .linearity import STATUS_CERTIFICATE, detect_linear
from .textio import format_set_text, read_set_file

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", help="comma-separated ascending integers")
    p.add_argument("--input", help="path to a set file (one integer per line)")
    p.add_argument("--bound", type=int, help="horizon B (default: declared or max element)")


def _add_output_options(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msum",
        description="Integer-set algebra: multisum closure, linearity certificates, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a set relative to its horizon")
    _add_input_options(p)
    _add_output_options(p, ("text", "json"))

    p = sub.add_parser("close", help="close a seed under multisums (or sums) up to a bound")
    _add_input_options(p)
    p.add_argument("--mode", choices=("multisum", "sum"), default="multisum")
    _add_output_options(p, ("text", "json"))

    p = sub.add_parser("multisums", help="list the multisums (or sums) of a set")
    _add_input_options(p)
    p.add_argument("--mode", choices=("multisum", "strict", "sum"), default="multisum")
    _add_output_options(p, ("text", "json"))

    p = sub.add_parser("detect-linear", help="search for an eventual-linearity certificate")
    _add_input_options(p)
    p.add_argument("--min-window", type=int, default=10, dest="min_window")
    _add_output_options(p, ("json", "text"))

    p = sub.add_parser(
        "schmerl",
        help="close the input, then run the constructive certification pipeline",
    )
    _add_input_options(p)
    p.add_argument("--n", type=int, required=True, help="cutoff index n (window is 6n-4 terms)")
    p.add_argument("--min-window", type=int, default=10, dest="min_window")
    _add_output_options(p, ("json", "text"))

    p = sub.add_parser("census", help="count a set family over {1..B}")
    p.add_argument("--family", choices=census_mod.FAMILIES, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--mode", choices=("dfs_pruned", "exhaustive"), default="dfs_pruned")
    p.add_argument("--witnesses", type=int, default=10, help="max extremal examples to emit")
    _add_output_options(p, ("csv", "json", "text"))

    return parser


def _parse_seed(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ParameterError(f"--seed must be comma-separated integers: {exc}") from exc
    if not values:
        raise ParameterError("--seed must list at least one integer")
    if any(q <= p for p, q in zip(values, values[1:])):
        raise ParameterError("--seed values must be strictly ascending")
    return values


def _bound_arg(args: argparse.Namespace) -> int | None:
    bound = getattr(args, "bound", None)
    if bound is not None and bound < 1:
        raise ParameterError("--bound must be >= 1")
    return bound


def _load_set(args: argparse.Namespace) -> IntSet:
    if args.seed and args.input:
        raise ParameterError("--seed and --input are mutually exclusive")
    bound = _bound_arg(args)
    if args.seed:
        values = _parse_seed(args.seed)
        return IntSet(values, bound)
    if args.input:
        S = read_set_file(args.input)
        if bound is not None:
            return IntSet(S.elements, bound)
        return S
    raise ParameterError("one of --seed or --input is required")


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_classify(args: argparse.Namespace) -> int:
    S = _load_set(args)
    c = classify(S)
    if args.format == "json":
        payload = c.to_json()
        payload["horizon"] = S.horizon
        payload["multisums"] = sorted(multisums(S))
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [
            c.summary(),
            f"sum-closed: {'yes' if c.is_sum_closed else 'no'}",
            f"multisum-closed: {'yes' if c.is_multisum_closed else 'no'}",
            f"sum-free: {'yes' if c.is_sum_free else 'no'}",
            f"multisum-free: {'yes' if c.is_multisum_free else 'no'}",
            f"complete-from: {c.complete_from}",
        ]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_close(args: argparse.Namespace) -> int:
    seed = _load_set(args)
    bound = _bound_arg(args) or seed.horizon
    close = multisum_closure if args.mode == "multisum" else sum_closure
    res = close(seed, bound)
    if args.format == "json":
        payload = res.stats_json()
        payload["horizon"] = res.result.horizon
        payload["elements"] = list(res.result.elements)
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, format_set_text(res.result))
    return EXIT_OK


def _cmd_multisums(args: argparse.Namespace) -> int:
    S = _load_set(args)
    values = {"multisum": multisums, "strict": strict_multisums, "sum": sums}[args.mode](S)
    ordered = sorted(values)
    if args.format == "json":
        _emit(args, json.dumps(ordered))
    else:
        _emit(args, "\n".join(str(v) for v in ordered) if ordered else "")
    return EXIT_OK


def _cmd_detect_linear(args: argparse.Namespace) -> int:
    S = _load_set(args)
    result = detect_linear(S, min_window=args.min_window)
    if args.format == "json":
        _emit(args, json.dumps(result.to_json(), indent=2))
    else:
        if result.certificate is not None:
            c = result.certificate
            _emit(args, f"certificate k={c.k} N={c.N} window={c.window_count} horizon={c.horizon}")
        else:
            _emit(args, result.status)
    return EXIT_OK if result.status == STATUS_CERTIFICATE else EXIT_NEGATIVE


def _cmd_schmerl(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ParameterError("--n must be >= 1")
    seed = _load_set(args)
    bound = _bound_arg(args) or seed.horizon
    A = multisum_closure(seed, bound).result
    window = 6 * args.n - 4
    if len(A) < window:
        raise ParameterError(
            f"the closed set has {len(A)} elements; the construction needs 6n-4 = {window}"
        )
    prefix = SequencePrefix(A.elements[:window], args.n)
    result = extract_modulus(prefix, A, min_window=args.min_window)
    if args.format == "json":
        payload = result.to_json()
        payload["k_final"] = result.k
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, f"k_final = {result.k}")
    return EXIT_OK


def _cmd_census(args: argparse.Namespace) -> int:
    record = census_mod.enumerate_family(
        args.family, args.bound, mode=args.mode, witness_limit=args.witnesses
    )
    if args.format == "json":
        _emit(args, json.dumps(record.to_json(), indent=2))
    elif args.format == "csv":
        _emit(args, census_mod.CSV_HEADER + "\n" + record.csv_row())
    else:
        lines = [
            f"family {record.family} at B={record.B}: {record.count} sets, max size {record.max_size}"
        ]
        lines.extend("  {" + ", ".join(map(str, w)) + "}" for w in record.witnesses)
        _emit(args, "\n".join(lines))
    return EXIT_OK


_HANDLERS = {
    "classify": _cmd_classify,
    "close": _cmd_close,
    "multisums": _cmd_multisums,
    "detect-linear": _cmd_detect_linear,
    "schmerl": _cmd_schmerl,
    "census": _cmd_census,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except SetFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConditionError as exc:
        payload = {"error": exc.kind, "message": str(exc), "details": exc.details}
        print(json.dumps(payload, indent=2))
        return EXIT_NEGATIVE
    except WitnessError as exc:
        payload = {"error": "witness", "message": str(exc)}
        print(json.dumps(payload, indent=2))
        return EXIT_NEGATIVE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
