"""Command-line interface for lyndon-induce."""

from __future__ import annotations

import argparse
import faulthandler
import logging
import sys
from pathlib import Path
from typing import NoReturn

from lyndon_induce.config import RunConfig
from lyndon_induce.errors import ErrorCode, LyndonInduceError
from lyndon_induce.options_enum import CheckStatus, EmitKind, LyndonVariant, OutputFormat
from lyndon_induce.pipeline import InputSource, run_bench, run_pipeline

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """Reports usage errors with exit status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ErrorCode.FLAG_CONFLICT.exit_code, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lyndon-induce",
        description="Compute the suffix array and Lyndon array of a byte string by induced sorting.",
    )
    source = parser.add_argument_group("input")
    source.add_argument("--text", help="Input given inline (UTF-8 encoded).")
    source.add_argument("--file", type=Path, help="Input file, read whole.")
    source.add_argument(
        "--gen",
        action="append",
        metavar="KIND:SIZE[:SEED]",
        help="Synthetic input: bbba, aaab, fib or rand[SIGMA]. Repeatable with --bench.",
    )
    source.add_argument("--remap", action="store_true", default=None, help="Map the observed bytes onto 1..k.")
    source.add_argument(
        "--allow-empty",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Accept an empty input as the sentinel-only text (default: on).",
    )

    run = parser.add_argument_group("run")
    run.add_argument(
        "--variant",
        action="append",
        choices=[v.value for v in LyndonVariant],
        help="Lyndon array variant (default: inplace). Repeatable with --bench.",
    )
    run.add_argument("--emit", choices=[e.value for e in EmitKind], help="Arrays to write (default: both).")
    run.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format (default: text).")
    run.add_argument("--width", type=int, choices=[4, 8], help="Binary entry width (default: smallest that fits).")
    run.add_argument("--out", type=Path, help="Output path (stdout for text when omitted).")
    run.add_argument("--check", action="store_true", default=None, help="Compare with the reference oracles.")

    bench = parser.add_argument_group("bench")
    bench.add_argument("--bench", action="store_true", help="Print one timing report per input and variant.")
    bench.add_argument("--double", type=int, metavar="K", help="Run generators at K successive doublings.")
    bench.add_argument("--reps", type=int, metavar="R", help="Repetitions per run; the fastest is reported.")
    bench.add_argument("--kv", action="store_true", default=None, help="Print reports as key=value pairs.")

    parser.add_argument("--config", type=Path, help="TOML configuration; flags override its values.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging.")
    return parser


def _load_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig.from_toml(args.config) if args.config is not None else RunConfig()
    variants = args.variant or []
    return config.with_overrides(
        {
            "variant": variants[0] if variants else None,
            "ingest": {"allow_empty": args.allow_empty, "remap": args.remap},
            "output": {"emit": args.emit, "format": args.format, "width": args.width, "path": args.out},
            "check": {"enabled": args.check},
            "bench": {"reps": args.reps, "double": args.double, "key_value": args.kv},
        }
    )


def _sources(args: argparse.Namespace, *, many: bool) -> list[InputSource]:
    generators = args.gen or []
    if not many and len(generators) > 1:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "--gen may repeat only with --bench")
    sources = [InputSource(generator=spec) for spec in generators]
    if args.text is not None or args.file is not None:
        sources.append(InputSource(text=args.text, file=args.file))
    if not sources:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "give one of --text, --file, --gen")
    if not many and len(sources) > 1:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "give exactly one of --text, --file, --gen")
    return sources


def _execute(args: argparse.Namespace) -> int:
    config = _load_config(args)
    if args.bench:
        variants = [LyndonVariant.from_str(v) for v in args.variant] if args.variant else [config.variant]
        reports = run_bench(config, _sources(args, many=True), variants)
        if not config.bench.key_value:
            print(reports[0].header() if reports else "")
        for report in reports:
            print(report.to_key_value() if config.bench.key_value else report.to_row())
        failed = [report.input_name for report in reports if report.check_status is CheckStatus.FAIL]
        if failed:
            raise LyndonInduceError(ErrorCode.CHECK_FAILED, f"oracle mismatch on {', '.join(failed)}")
        return 0

    if args.variant and len(args.variant) > 1:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "--variant may repeat only with --bench")
    if args.double is not None or args.reps is not None:
        raise LyndonInduceError(ErrorCode.FLAG_CONFLICT, "--double and --reps need --bench")
    (source,) = _sources(args, many=False)
    outcome = run_pipeline(config, source, sys.stdout)
    report = outcome.report
    print(report.to_key_value() if config.bench.key_value else report.to_row(), file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    """Entry point for the ``lyndon-induce`` command.

    Parameters
    ----------
    argv:
        Argument list (defaults to ``sys.argv[1:]`` when ``None``).

    Returns:
    -------
    int
        0 on success, 1 for usage errors, 2 for I/O errors, 3 when a check fails.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    faulthandler.enable(file=sys.stderr)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return _execute(args)
    except LyndonInduceError as exc:
        logger.error("%s", exc)  # noqa: TRY400
        return exc.code.exit_code
    except OSError as exc:
        logger.error("%s", exc)  # noqa: TRY400
        return ErrorCode.IO_ERROR.exit_code
    except ValueError as exc:
        logger.error("%s", exc)  # noqa: TRY400
        return ErrorCode.FLAG_CONFLICT.exit_code
