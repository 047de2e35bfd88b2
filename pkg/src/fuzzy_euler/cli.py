"""Command-line entry point: ``fuzzy-euler <command> [options]``.

Exit status: 0 when every enabled check passes, 1 when a check misses its
tolerance, 2 for usage errors, 3 for a missing file, 4 for an unparsable
input or config document, 5 for out-of-range parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .experiments import COMMANDS, ConfigError, ExperimentConfig, run, write_report
from .io import FormatError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_MISSING_FILE = 3
EXIT_PARSE = 4
EXIT_RANGE = 5


def _tolerance(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tolerance {name!r} needs a number, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzy-euler",
        description="Euler means of fuzzy sequences, Tauberian diagnostics and binomial bound checks.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--p", type=float, help="Euler order p")
    parser.add_argument("--upto", type=int, help="last index (transforms), n max (bounds), or n (limits)")
    parser.add_argument("--grid", type=int, dest="grid_size", help="alpha grid size for generated sequences")
    parser.add_argument("--in", dest="input_path", help="input sequence (JSON)")
    parser.add_argument("--out", dest="output_path", help="CSV report path; summary goes to <out>.summary.json")
    parser.add_argument("--tol", action="append", type=_tolerance, default=[], metavar="NAME=VALUE")
    parser.add_argument("--config", help="JSON config document; flags override its values")
    parser.add_argument("--p-grid", type=float, nargs="+", help="p values for 'bounds'")
    parser.add_argument("--q", type=int, nargs="+", dest="q_values", help="q values for 'limits-check'")
    parser.add_argument("--series", action="store_true", default=None,
                        help="diagnose: use sqrt(n) D(u_n, 0) on series terms")
    parser.add_argument("--expect", help="diagnose: required classification")
    return parser


def _load_config(path: str) -> dict:
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(path)
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"config {path}: expected a JSON object")
    return data


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    data: dict = _load_config(args.config) if args.config else {}
    data["command"] = args.command
    for key in ("p", "upto", "grid_size", "input_path", "output_path", "p_grid", "q_values",
                "series", "expect"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value
    tolerances = dict(data.get("tolerances", {}))
    tolerances.update(dict(args.tol))
    data["tolerances"] = tolerances
    return ExperimentConfig.from_mapping(data)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        if config.input_path is not None and not Path(config.input_path).is_file():
            raise FileNotFoundError(config.input_path)
        report = run(config)
    except FileNotFoundError as exc:
        print(f"fuzzy-euler: file not found: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except FormatError as exc:
        print(f"fuzzy-euler: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, ValueError, IndexError, TypeError) as exc:
        print(f"fuzzy-euler: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_RANGE

    if config.output_path is None:
        sys.stdout.write(report.to_csv())
        sys.stderr.write(report.summary_json())
    else:
        write_report(report, config.output_path)
    status = "PASS" if report.passed else "FAIL"
    print(f"{config.command}: {status}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
