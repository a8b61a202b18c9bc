"""Experiment configuration: parameter schemas, config files and validation.

Config files are flat UTF-8 ``key = value`` lines; ``#`` starts a comment.
Besides experiment parameters a file may set ``experiment``, ``seed`` and
``workers``.  Unknown keys are errors.  Command-line flags override file
values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log
from pathlib import Path
from typing import Any, Callable

from ..arith import is_prime
from ..errors import ConfigError, RandPolyError
from ..zpoly.intpoly import parse_model

DEFAULT_SEED = 0x243F6A8885A308D3
MAX_SEED = (1 << 64) - 1


def parse_int(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError as exc:
        raise ConfigError(f"not an integer: {text!r}") from exc


def parse_float(text: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"not a number: {text!r}") from exc


def parse_int_list(text: str) -> tuple[int, ...]:
    """Comma-separated integers; ``a..b`` is an inclusive range."""
    out: list[int] = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if ".." in tok:
            lo, hi = tok.split("..", 1)
            out.extend(range(parse_int(lo), parse_int(hi) + 1))
        else:
            out.append(parse_int(tok))
    if not out:
        raise ConfigError(f"empty list: {text!r}")
    return tuple(out)


def parse_prime_list(text: str) -> tuple[int, ...]:
    primes = parse_int_list(text)
    bad = [p for p in primes if not is_prime(p)]
    if bad:
        raise ConfigError(f"not prime: {bad}")
    if len(set(primes)) != len(primes):
        raise ConfigError(f"duplicate primes in {text!r}")
    return primes


def parse_prime(text: str) -> int:
    p = parse_int(text)
    if not is_prime(p):
        raise ConfigError(f"not prime: {p}")
    return p


def parse_model_text(text: str) -> str:
    try:
        return parse_model(text).label()
    except RandPolyError as exc:
        raise ConfigError(str(exc)) from exc


@dataclass(frozen=True)
class Param:
    name: str
    parse: Callable[[str], Any]
    default: str | None = None  # None means required
    help: str = ""
    optional: bool = False  # absent is allowed and resolved by the experiment


def _p(name, parse, default=None, help="", optional=False):
    return Param(name, parse, default, help, optional)


SCHEMAS: dict[str, list[Param]] = {
    "irreducibility_rate": [
        _p("degrees", parse_int_list, help="degrees n, e.g. 10,20,40"),
        _p("L", parse_int, "210", "coefficients uniform in 1..L"),
        _p("model", parse_model_text, optional=True, help="override the coefficient model"),
        _p("primes", parse_prime_list, "2,3,5,7", "sieve primes"),
        _p("trials", parse_int, "10000"),
    ],
    "tv_distance": [
        _p("q", parse_prime, "2"),
        _p("n", parse_int),
        _p("r", parse_int_list, optional=True, help="cutoffs (default 1..n+1)"),
    ],
    "distribution_audit": [
        _p("q", parse_prime, "2"),
        _p("degrees", parse_int_list),
    ],
    "disc_stats": [
        _p("model", parse_model_text, "pm1"),
        _p("degrees", parse_int_list),
        _p("trials", parse_int, "10000"),
    ],
    "table1_scan": [
        _p("model", parse_model_text, "pm1"),
        _p("degrees", parse_int_list, help="odd degrees with n = 1 mod 4"),
        _p("trials", parse_int, "100000"),
    ],
    "det_square": [
        _p("degrees", parse_int_list, help="matrix dimensions"),
        _p("trials", parse_int, "100000"),
    ],
    "cycle_events": [
        _p("n", parse_int),
        _p("k", parse_int_list, help="window starts; the window is [k, 2k]"),
        _p("lam", parse_int, "0", "slack for the shifted-window variant"),
        _p("trials", parse_int, "10000", "quadruples of permutations per k"),
        _p("threshold", parse_float, optional=True, help="double-divisor threshold (default ln(n)^3)"),
        _p("a", parse_float, "0.5", "rough-cycle window [n^a, n^b]"),
        _p("b", parse_float, "1.0"),
        _p("prime_floor", parse_float, optional=True, help="rough-cycle prime floor (default ln(n)^3)"),
    ],
    "small_divisor_rate": [
        _p("degrees", parse_int_list),
        _p("L", parse_int, "210"),
        _p("model", parse_model_text, optional=True),
        _p("primes", parse_prime_list, "2,3,5,7"),
        _p("d", parse_int_list, help="divisor-degree bounds"),
        _p("trials", parse_int, "10000"),
    ],
}

EXPERIMENTS = tuple(SCHEMAS)
META_KEYS = ("experiment", "seed", "workers")


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    params: dict[str, Any]
    master_seed: int = DEFAULT_SEED
    workers: int = 1
    raw: dict[str, str] = field(default_factory=dict, compare=False)

    def echo(self) -> dict[str, Any]:
        """Everything that determines the results (worker count deliberately excluded)."""
        out: dict[str, Any] = {"experiment": self.experiment, "seed": self.master_seed}
        for k in sorted(self.params):
            v = self.params[k]
            out[k] = list(v) if isinstance(v, tuple) else v
        return out


def read_config_file(path: str | Path) -> dict[str, str]:
    out: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key:
            raise ConfigError(f"{path}:{lineno}: empty key")
        if key in out:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def build_config(experiment: str, values: dict[str, str]) -> ExperimentConfig:
    """Validate raw string values against the experiment's schema."""
    if experiment not in SCHEMAS:
        raise ConfigError(f"unknown experiment {experiment!r}; choose from {', '.join(EXPERIMENTS)}")
    values = dict(values)
    file_exp = values.pop("experiment", experiment)
    if file_exp != experiment:
        raise ConfigError(f"config is for {file_exp!r}, not {experiment!r}")
    seed = parse_int(values.pop("seed", str(DEFAULT_SEED)))
    if not 0 <= seed <= MAX_SEED:
        raise ConfigError("seed must be an unsigned 64-bit integer")
    workers = parse_int(values.pop("workers", "1"))
    if workers < 1:
        raise ConfigError("workers must be positive")
    schema = {p.name: p for p in SCHEMAS[experiment]}
    unknown = sorted(set(values) - set(schema))
    if unknown:
        raise ConfigError(f"unknown keys for {experiment}: {', '.join(unknown)}")
    params: dict[str, Any] = {}
    for name, param in schema.items():
        if name in values:
            params[name] = param.parse(values[name])
        elif param.default is not None:
            params[name] = param.parse(param.default)
        elif not param.optional:
            raise ConfigError(f"missing required parameter {name!r} for {experiment}")
    params = resolve(experiment, params)
    return ExperimentConfig(experiment, params, seed, workers, dict(values))


def _positive(params, *names):
    for name in names:
        if params[name] < 1:
            raise ConfigError(f"{name} must be positive")


def resolve(experiment: str, params: dict[str, Any]) -> dict[str, Any]:
    """Fill derived defaults and check cross-parameter constraints."""
    p = dict(params)
    if "trials" in p:
        _positive(p, "trials")
    if experiment in ("irreducibility_rate", "small_divisor_rate"):
        if p["L"] < 1:
            raise ConfigError("L must be positive")
        if "model" not in p:
            p["model"] = f"uniform:1:{p['L']}"
        if any(n < 2 for n in p["degrees"]):
            raise ConfigError("degrees must be >= 2")
        if experiment == "small_divisor_rate" and any(d < 0 for d in p["d"]):
            raise ConfigError("divisor bounds must be >= 0")
    elif experiment == "tv_distance":
        n = p["n"]
        if n < 1:
            raise ConfigError("n must be >= 1")
        p.setdefault("r", tuple(range(1, n + 2)))
        if any(not 1 <= r <= n + 1 for r in p["r"]):
            raise ConfigError(f"cutoffs must lie in 1..{n + 1}")
    elif experiment == "distribution_audit":
        if any(n < 1 for n in p["degrees"]):
            raise ConfigError("degrees must be >= 1")
    elif experiment in ("disc_stats", "table1_scan"):
        if any(n < 2 for n in p["degrees"]):
            raise ConfigError("degrees must be >= 2")
        if experiment == "table1_scan" and any(n % 4 != 1 for n in p["degrees"]):
            raise ConfigError("table1_scan degrees must be = 1 mod 4")
    elif experiment == "det_square":
        if any(n < 1 for n in p["degrees"]):
            raise ConfigError("dimensions must be >= 1")
    elif experiment == "cycle_events":
        n = p["n"]
        if n < 2:
            raise ConfigError("n must be >= 2")
        if any(not 1 <= k or 2 * k >= n for k in p["k"]):
            raise ConfigError(f"every k needs 1 <= k < n/2 so the window [k, 2k] fits below n={n}")
        if p["lam"] < 0:
            raise ConfigError("lam must be >= 0")
        default_floor = log(n) ** 3
        p.setdefault("threshold", default_floor)
        p.setdefault("prime_floor", default_floor)
        if not 0 <= p["a"] < p["b"] <= 1:
            raise ConfigError("need 0 <= a < b <= 1")
    return p
