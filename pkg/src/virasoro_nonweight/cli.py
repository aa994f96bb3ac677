"""Command-line front end: verify, act and classify."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from virasoro_nonweight.algebra.errors import ElementParseError, ParameterError
from virasoro_nonweight.algebra.tensor import TensorElement, TensorModule, parse_word
from virasoro_nonweight.config import ConfigError, build_context, load_run_config
from virasoro_nonweight.verify.formatter import ReportFormatter
from virasoro_nonweight.verify.isomorphism import classify_iso
from virasoro_nonweight.verify.registry import SuiteError, default_registry

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _overrides(args: argparse.Namespace) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    return overrides


def _parse_element(text: str) -> TensorElement:
    if text.lstrip().startswith("["):
        return TensorElement.from_json(text)
    return TensorElement.from_text(text)


def cmd_verify(args: argparse.Namespace) -> int:
    config = load_run_config(args.config, _overrides(args))
    ctx = build_context(config)
    registry = default_registry()
    reports = registry.run(args.suite or config.suites, ctx)

    print(ReportFormatter().format_summary(reports, verbose=args.verbose))
    if args.report:
        payload = [report.to_json_dict() for report in reports]
        try:
            Path(args.report).write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        except OSError as e:
            print(f"error: cannot write report {args.report}: {e.strerror}", file=sys.stderr)
            return EXIT_INPUT
        logger.info(f"wrote {len(reports)} reports to {args.report}")

    failed = [r for r in reports if not r.skipped and not r.passed]
    return EXIT_FAILED if failed else EXIT_OK


def cmd_act(args: argparse.Namespace) -> int:
    config = load_run_config(args.config, _overrides(args))
    ctx = build_context(config)
    word = parse_word(args.word)
    x = _parse_element(args.element)
    result = TensorModule(ctx.params, ctx.spec).apply_word(word, x)
    print(result.text())
    print(json.dumps(result.to_json(), sort_keys=True))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    first = build_context(load_run_config(args.first))
    second = build_context(load_run_config(args.second))
    verdict = classify_iso(first.params, first.spec, second.params, second.spec)
    print(ReportFormatter().format_verdict(verdict))
    if args.json:
        print(verdict.model_dump_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="virasoro-nonweight",
        description="Exact computations in the modules M(V, mu, Omega(lambda, alpha))",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--config", help="Run configuration (.json or .yaml)")
    verify.add_argument(
        "--suite",
        action="append",
        help="Suite name, comma-separated list, or 'all' (repeatable; default from config)",
    )
    verify.add_argument("--report", help="Write the JSON report array to this path")
    verify.add_argument("--seed", type=int, help="Override the sampling seed")
    verify.set_defaults(func=cmd_verify)

    act = sub.add_parser("act", parents=[common], help="Apply a word in L_m and C to an element")
    act.add_argument("--config", help="Run configuration (.json or .yaml)")
    act.add_argument("--word", required=True, help="Generators, e.g. '[1, -1]' or '[C]'")
    act.add_argument(
        "--element", required=True, help="Element text ('e_0 d^1 * 1') or JSON term list"
    )
    act.set_defaults(func=cmd_act)

    classify = sub.add_parser(
        "classify", parents=[common], help="Decide whether two modules are isomorphic"
    )
    classify.add_argument("first", help="Configuration of the first module")
    classify.add_argument("second", help="Configuration of the second module")
    classify.add_argument("--json", action="store_true", help="Also print the verdict as JSON")
    classify.set_defaults(func=cmd_classify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return int(args.func(args))
    except (ConfigError, SuiteError, ElementParseError, ParameterError) as e:
        if args.verbose:
            logger.exception("input error")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
