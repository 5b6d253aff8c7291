"""Command-line surface: validate, plan, forecast, trace.

Exit codes: 0 when the command's checks pass, 1 when a compliance or
validation check fails, 2 on input errors (unreadable files, schema problems,
unknown names, bad flags). Reports never embed timestamps; ``--stamp`` emits
one on stderr so stdout stays byte-comparable.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from typing import Any, Mapping

from .model import ConfigurationError, DomainError, validate_network
from .netfile import load_network
from .planning import (
    ValidationFailure,
    forecast_to_dict,
    plan_to_dict,
    render_forecast_text,
    render_plan_text,
    render_trace_text,
    render_violations_text,
    run_forecast,
    run_plan,
    run_trace,
    to_json,
    trace_to_dict,
    traffic_input_from_mapping,
    violations_to_dict,
)
from .traffic import TrafficInput

_FORECAST_FLAGS = (
    ("population", int),
    ("cellular_penetration", float),
    ("operator_share", float),
    ("lte_penetration", float),
    ("annual_growth", float),
    ("horizon", int),
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fiberplan",
        description="Plan optical backbone and distribution links: budgets, forecasts, traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="report format")
    common.add_argument("--out", metavar="PATH", help="write the report to a file instead of stdout")
    common.add_argument("--stamp", action="store_true", help="emit a timestamp on stderr")

    p = sub.add_parser("validate", parents=[common], help="check a network file's structure")
    p.add_argument("--network", required=True, metavar="PATH")

    p = sub.add_parser("plan", parents=[common], help="power and rise-time plan for a path")
    p.add_argument("--network", required=True, metavar="PATH")
    p.add_argument("--standard", required=True, metavar="NAME", help="compliance profile name")
    p.add_argument("--path", default="ring", metavar="SPEC", help="'ring' or comma-separated node ids")
    p.add_argument(
        "--as-built",
        action="store_true",
        help="judge only amplifiers present in the span inventory, ignoring the sized plan",
    )

    p = sub.add_parser("forecast", parents=[common], help="subscriber forecast")
    p.add_argument("--network", metavar="PATH", help="network file with a 'traffic' key")
    for name, kind in _FORECAST_FLAGS:
        p.add_argument(f"--{name.replace('_', '-')}", type=kind, dest=name)

    p = sub.add_parser("trace", parents=[common], help="per-element power trace along a path")
    p.add_argument("--network", required=True, metavar="PATH")
    p.add_argument("--path", default="ring", metavar="SPEC", help="'ring' or comma-separated node ids")
    p.add_argument("--power", type=float, metavar="DBM", help="injected power; defaults to the transmitter's")
    p.add_argument("--ber", action="store_true", help="append a BER estimate at the final point")

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _forecast_inputs(args: argparse.Namespace) -> TrafficInput:
    values: dict[str, Any] = {}
    if args.network:
        doc = load_network(args.network)
        if doc.traffic is None:
            raise ConfigurationError(f"{args.network}: no 'traffic' key to forecast from")
        base: Mapping[str, Any] = doc.traffic
        values.update(base)
    for name, _ in _FORECAST_FLAGS:
        flag_value = getattr(args, name)
        if flag_value is not None:
            values[name] = flag_value
    missing = [name for name, _ in _FORECAST_FLAGS if name not in values]
    if missing:
        flags = ", ".join("--" + name.replace("_", "-") for name in missing)
        raise ConfigurationError(f"forecast inputs incomplete; provide {flags} or a network file")
    return traffic_input_from_mapping(values)


def _run(args: argparse.Namespace) -> int:
    if args.command == "validate":
        doc = load_network(args.network)
        violations = validate_network(doc.network)
        if args.format == "json":
            _emit(to_json(violations_to_dict(violations)), args.out)
        else:
            _emit(render_violations_text(violations), args.out)
        return 0 if not violations else 1

    if args.command == "plan":
        report = run_plan(args.network, args.standard, args.path, as_built=args.as_built)
        if args.format == "json":
            _emit(to_json(plan_to_dict(report)), args.out)
        else:
            _emit(render_plan_text(report), args.out)
        return 0 if report.overall_pass else 1

    if args.command == "forecast":
        inputs = _forecast_inputs(args)
        forecast = run_forecast(inputs)
        if args.format == "json":
            _emit(to_json(forecast_to_dict(inputs, forecast)), args.out)
        else:
            _emit(render_forecast_text(inputs, forecast), args.out)
        return 0

    if args.command == "trace":
        trace, ber = run_trace(args.network, args.path, input_power=args.power, with_ber=args.ber)
        if args.format == "json":
            _emit(to_json(trace_to_dict(trace, ber)), args.out)
        else:
            _emit(render_trace_text(trace, ber), args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.stamp:
        print(f"generated {datetime.now(timezone.utc).isoformat()}", file=sys.stderr)
    try:
        return _run(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation.element}: {violation.rule}: {violation.message}", file=sys.stderr)
        return 2
    except (ConfigurationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
