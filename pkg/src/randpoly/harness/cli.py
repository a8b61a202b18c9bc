"""Command-line entry point: ``randpoly <experiment> [flags]`` and ``randpoly certify``.

Exit codes: 0 success, 2 configuration or usage error, 3 capacity error,
4 internal invariant violation (including undecidable precision failures).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import CapacityError, InvariantViolation, PrecisionError, UsageError
from ..zpoly.intpoly import parse_poly_line
from ..zpoly.sieve import DEFAULT_PRIMES, degree_sieve_certify
from .config import SCHEMAS, build_config, parse_prime_list, read_config_file
from .runner import run_experiment

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CAPACITY = 3
EXIT_INVARIANT = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="randpoly", description="Random polynomial experiments.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, schema in SCHEMAS.items():
        sp = sub.add_parser(name, help=f"run the {name} experiment")
        sp.add_argument("--config", help="flat key = value config file")
        sp.add_argument("--seed", help="master seed (unsigned 64-bit)")
        sp.add_argument("--workers", help="worker processes")
        sp.add_argument("--out", help="output path (default stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        for param in schema:
            default = f" (default {param.default})" if param.default is not None else ""
            sp.add_argument(f"--{param.name}", dest=f"param_{param.name}",
                            help=f"{param.help}{default}".strip() or None)
    cert = sub.add_parser("certify", help="sieve-certify polynomials from a text file")
    cert.add_argument("input", help="one polynomial per line: coefficients from constant to leading")
    cert.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)))
    cert.add_argument("--out", help="output path (default stdout)")
    cert.add_argument("--no-early-exit", action="store_true",
                      help="scan every prime even after irreducibility is certified")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_experiment(args) -> None:
    values = read_config_file(args.config) if args.config else {}
    for key in ("seed", "workers"):
        if getattr(args, key) is not None:
            values[key] = getattr(args, key)
    for param in SCHEMAS[args.command]:
        given = getattr(args, f"param_{param.name}")
        if given is not None:
            values[param.name] = given
    cfg = build_config(args.command, values)
    report = run_experiment(cfg)
    _emit(report.render(args.format), args.out)


def certify_lines(lines, primes, *, early_exit: bool = True) -> str:
    """CSV verdicts (line, degree, status, witness, primes_used) for polynomial lines."""
    out = ["line,degree,status,witness,primes_used"]
    for lineno, line in enumerate(lines, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            f = parse_poly_line(text)
            v = degree_sieve_certify(f, primes, early_exit=early_exit)
        except UsageError as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc
        out.append(f"{lineno},{v.n},{v.status.value},{';'.join(map(str, v.degrees()))},"
                   f"{';'.join(map(str, v.primes_used))}")
    return "\n".join(out) + "\n"


def _run_certify(args) -> None:
    primes = parse_prime_list(args.primes)
    try:
        lines = Path(args.input).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from exc
    _emit(certify_lines(lines, primes, early_exit=not args.no_early_exit), args.out)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "certify":
            _run_certify(args)
        else:
            _run_experiment(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InvariantViolation, PrecisionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
