"""Experiment definitions: cells, per-trial kernels, summaries and CSV columns.

A Monte Carlo experiment is split into cells (one per degree, per k, ...).
Trial ``t`` of a cell draws everything from
``RandomStream.for_trial(seed, cell.tag, t)``, so a trial's outcome depends
only on the seed, the cell and ``t``.  Summaries consume the per-trial
records in index order.  Exact experiments (``tv_distance``,
``distribution_audit``) have no trials and compute their rows directly.

CSV column order per experiment is fixed by ``columns_for``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Any, Callable

from ..det_lab import det_square_trial
from ..dist_compare import build_distribution, exhaustive_distribution, mismatches, tv_profile
from ..perm_lab import (achievable_sums, has_double_divisor, has_rough_cycle, sample_cycle_type,
                        slack_sums, window_mask)
from ..rng import RandomStream
from ..zpoly.disc_report import analyze_discriminant
from ..zpoly.intpoly import parse_model, sample_int_poly
from ..zpoly.oracle import MAX_ORACLE_DEGREE, divisor_degrees_small
from ..zpoly.sieve import degree_sieve_certify
from .stats import binomial_radius, histogram_text, linear_fit, log_abs, mean_var

# Jumps of the arithmetic progressions of allowed v2 values for n = 1 mod 4
# (degree -> jump), as tabulated from the +-1 simulations.
TABLE1_JUMPS = {9: 4, 13: 3, 17: 2, 21: 10, 25: 12, 29: 2, 33: 8, 41: 1, 45: 11, 49: 4,
                53: 2, 61: 5, 65: 2, 69: 1, 77: 2, 85: 14, 89: 2, 97: 3}
# Degrees where only v2 = n - 1 was ever observed.
TABLE1_SINGLE = frozenset({37, 57, 73, 81, 93})

# Largest degree for which small_divisor_rate also runs the exact oracle.
ORACLE_DEGREE_LIMIT = 10
assert ORACLE_DEGREE_LIMIT <= MAX_ORACLE_DEGREE


@dataclass(frozen=True)
class Cell:
    key: tuple
    tag: str
    trials: int


@lru_cache(maxsize=32)
def _model(text: str):
    return parse_model(text)


def _freq(hits: int, trials: int) -> tuple[float, float]:
    return hits / trials, binomial_radius(hits, trials)


def _proper_mask(n: int, d: int) -> int:
    """Bits 1..min(d, n-1): degrees of proper divisors up to d."""
    hi = min(d, n - 1)
    return window_mask(1, hi) if hi >= 1 else 0


class MonteCarlo:
    name = ""
    columns: list[str] = []

    def cells(self, p: dict) -> list[Cell]:
        return [Cell((n,), f"{self.name}/n={n}", p["trials"]) for n in p["degrees"]]

    def trial(self, p: dict, cell: Cell, stream: RandomStream) -> Any:
        raise NotImplementedError

    def summarize(self, p: dict, cell: Cell, records: list) -> list[dict]:
        raise NotImplementedError

    def finalize(self, p: dict, rows: list[dict]) -> list[dict]:
        return rows


class IrreducibilityRate(MonteCarlo):
    name = "irreducibility_rate"
    columns = ["n", "model", "primes", "trials", "certified", "rate", "radius", "unknown",
               "unknown_witness_sizes"]

    def trial(self, p, cell, stream):
        f = sample_int_poly(cell.key[0], _model(p["model"]), stream)
        v = degree_sieve_certify(f, p["primes"])
        return v.irreducible, bin(v.witness).count("1")

    def summarize(self, p, cell, records):
        certified = sum(1 for ok, _ in records if ok)
        sizes: dict[int, int] = {}
        for ok, size in records:
            if not ok:
                sizes[size] = sizes.get(size, 0) + 1
        rate, radius = _freq(certified, len(records))
        return [{"n": cell.key[0], "model": p["model"], "primes": ";".join(map(str, p["primes"])),
                 "trials": len(records), "certified": certified, "rate": rate, "radius": radius,
                 "unknown": len(records) - certified, "unknown_witness_sizes": histogram_text(sizes)}]


class SmallDivisorRate(MonteCarlo):
    name = "small_divisor_rate"
    columns = ["n", "d", "model", "trials", "witness_hits", "witness_rate", "witness_radius",
               "oracle_hits", "oracle_rate", "oracle_radius"]

    def trial(self, p, cell, stream):
        n = cell.key[0]
        f = sample_int_poly(n, _model(p["model"]), stream)
        witness = degree_sieve_certify(f, p["primes"]).witness
        oracle = divisor_degrees_small(f) if n <= ORACLE_DEGREE_LIMIT else None
        return witness, oracle

    def summarize(self, p, cell, records):
        n = cell.key[0]
        rows = []
        for d in p["d"]:
            mask = _proper_mask(n, d)
            hits = sum(1 for w, _ in records if w & mask)
            rate, radius = _freq(hits, len(records))
            row = {"n": n, "d": d, "model": p["model"], "trials": len(records),
                   "witness_hits": hits, "witness_rate": rate, "witness_radius": radius,
                   "oracle_hits": None, "oracle_rate": None, "oracle_radius": None}
            if n <= ORACLE_DEGREE_LIMIT:
                ohits = sum(1 for _, o in records if o & mask)
                row["oracle_hits"] = ohits
                row["oracle_rate"], row["oracle_radius"] = _freq(ohits, len(records))
            rows.append(row)
        return rows


class DiscStats(MonteCarlo):
    """Discriminant statistics.  ln|disc| is the one floating-point quantity."""

    name = "disc_stats"
    columns = ["n", "model", "trials", "degenerate", "squares", "positive", "negative",
               "v2_min", "v2_max", "v2_hist", "mean_log", "var_log",
               "mean_fit", "mean_resid", "var_fit", "var_resid",
               "mean_slope", "mean_intercept", "var_slope", "var_intercept"]

    def trial(self, p, cell, stream):
        f = sample_int_poly(cell.key[0], _model(p["model"]), stream)
        rep = analyze_discriminant(f, count_real=False)
        if rep.degenerate:
            return None
        return rep.v2, rep.is_square, rep.sign, log_abs(rep.disc)

    def summarize(self, p, cell, records):
        live = [r for r in records if r is not None]
        hist: dict[int, int] = {}
        for v, *_ in live:
            hist[v] = hist.get(v, 0) + 1
        mean, var = mean_var([r[3] for r in live])
        return [{"n": cell.key[0], "model": p["model"], "trials": len(records),
                 "degenerate": len(records) - len(live),
                 "squares": sum(1 for r in live if r[1]),
                 "positive": sum(1 for r in live if r[2] > 0),
                 "negative": sum(1 for r in live if r[2] < 0),
                 "v2_min": min(hist) if hist else None, "v2_max": max(hist) if hist else None,
                 "v2_hist": histogram_text(hist), "mean_log": mean, "var_log": var}]

    def finalize(self, p, rows):
        for stat in ("mean", "var"):
            pts = [(r["n"], r[f"{stat}_log"]) for r in rows if r[f"{stat}_log"] is not None]
            fit = linear_fit([x for x, _ in pts], [y for _, y in pts])
            for r in rows:
                y = r[f"{stat}_log"]
                if fit is None or y is None:
                    r[f"{stat}_fit"] = r[f"{stat}_resid"] = None
                else:
                    r[f"{stat}_fit"] = fit[0] * r["n"] + fit[1]
                    r[f"{stat}_resid"] = y - r[f"{stat}_fit"]
                r[f"{stat}_slope"], r[f"{stat}_intercept"] = fit if fit else (None, None)
        return rows


def longest_run(values: list[int]) -> int:
    """Length of the longest block of consecutive integers in a sorted list."""
    best = run = 0
    prev = None
    for v in values:
        run = run + 1 if prev is not None and v == prev + 1 else 1
        best = max(best, run)
        prev = v
    return best


def table1_violations(n: int, values) -> int:
    """Number of observed v2 values outside the tabulated progression for n."""
    base = n - 1
    if n in TABLE1_SINGLE:
        return sum(1 for v in values if v != base)
    jump = TABLE1_JUMPS.get(n)
    if jump is None:
        return sum(1 for v in values if v < base)
    return sum(1 for v in values if v < base or (v - base) % jump)


class Table1Scan(MonteCarlo):
    name = "table1_scan"
    columns = ["n", "model", "trials", "degenerate", "v2_values", "v2_hist", "jump",
               "table_jump", "longest_run", "violations"]

    def trial(self, p, cell, stream):
        f = sample_int_poly(cell.key[0], _model(p["model"]), stream)
        rep = analyze_discriminant(f, count_real=False)
        return rep.v2

    def summarize(self, p, cell, records):
        n = cell.key[0]
        hist: dict[int, int] = {}
        for v in records:
            if v is not None:
                hist[v] = hist.get(v, 0) + 1
        values = sorted(hist)
        jump = 0
        for v in values[1:]:
            jump = gcd(jump, v - values[0])
        # 0 marks a degree where only n - 1 is allowed; None a degree outside the table
        table_jump = 0 if n in TABLE1_SINGLE else TABLE1_JUMPS.get(n)
        return [{"n": n, "model": p["model"], "trials": len(records),
                 "degenerate": sum(1 for v in records if v is None),
                 "v2_values": ";".join(map(str, values)), "v2_hist": histogram_text(hist),
                 "jump": jump, "table_jump": table_jump, "longest_run": longest_run(values),
                 "violations": sum(hist[v] for v in values if table1_violations(n, [v]))}]


class DetSquare(MonteCarlo):
    name = "det_square"
    columns = ["n", "trials", "square_count", "singular_count", "frequency", "ci_radius",
               "singular_frequency"]

    def trial(self, p, cell, stream):
        return det_square_trial(cell.key[0], stream)

    def summarize(self, p, cell, records):
        squares = sum(1 for sq, _ in records if sq)
        singular = sum(1 for _, z in records if z)
        freq, radius = _freq(squares, len(records))
        return [{"n": cell.key[0], "trials": len(records), "square_count": squares,
                 "singular_count": singular, "frequency": freq, "ci_radius": radius,
                 "singular_frequency": singular / len(records)}]


class CycleEvents(MonteCarlo):
    name = "cycle_events"
    columns = ["n", "k", "lam", "trials", "window_hits", "window_frequency", "window_radius",
               "slack_hits", "slack_frequency", "slack_radius", "permutations",
               "double_divisor_hits", "double_divisor_frequency", "rough_hits", "rough_frequency",
               "threshold", "a", "b", "prime_floor"]

    def cells(self, p):
        n = p["n"]
        return [Cell((n, k), f"{self.name}/n={n}/k={k}", p["trials"]) for k in p["k"]]

    def trial(self, p, cell, stream):
        n, k = cell.key
        window = window_mask(k, 2 * k)
        common = slack_common = (1 << (n + 1)) - 1
        double = rough = 0
        for _ in range(4):
            ct = sample_cycle_type(n, stream)
            bits = achievable_sums(ct)
            common &= bits
            slack_common &= slack_sums(bits, p["lam"])
            double += has_double_divisor(ct, p["threshold"])
            rough += has_rough_cycle(ct, p["a"], p["b"], p["prime_floor"])
        return bool(common & window), bool(slack_common & window), double, rough

    def summarize(self, p, cell, records):
        n, k = cell.key
        trials = len(records)
        hits = sum(1 for r in records if r[0])
        slack = sum(1 for r in records if r[1])
        double = sum(r[2] for r in records)
        rough = sum(r[3] for r in records)
        wf, wr = _freq(hits, trials)
        sf, sr = _freq(slack, trials)
        perms = 4 * trials
        return [{"n": n, "k": k, "lam": p["lam"], "trials": trials, "window_hits": hits,
                 "window_frequency": wf, "window_radius": wr, "slack_hits": slack,
                 "slack_frequency": sf, "slack_radius": sr, "permutations": perms,
                 "double_divisor_hits": double, "double_divisor_frequency": double / perms,
                 "rough_hits": rough, "rough_frequency": rough / perms,
                 "threshold": p["threshold"], "a": p["a"], "b": p["b"],
                 "prime_floor": p["prime_floor"]}]


MONTE_CARLO: dict[str, MonteCarlo] = {e.name: e for e in (
    IrreducibilityRate(), SmallDivisorRate(), DiscStats(), Table1Scan(), DetSquare(), CycleEvents())}


def tv_rows(p: dict) -> list[dict]:
    q, n = p["q"], p["n"]
    tv = tv_profile(q, n, p["r"])
    scaled = {r: r * v for r, v in tv.items()}
    best_r = max(scaled, key=lambda r: (scaled[r], -r))
    return [{"q": q, "n": n, "r": r, "tv": tv[r], "r_tv": scaled[r], "tv_approx": float(tv[r]),
             "max_r_tv": scaled[best_r], "argmax_r": best_r} for r in p["r"]]


def audit_rows(p: dict) -> list[dict]:
    q = p["q"]
    rows = []
    for n in p["degrees"]:
        formula = build_distribution(q, n, "X")
        exhaustive = exhaustive_distribution(q, n)
        rows.append({"q": q, "n": n, "formula_cells": len(formula.entries),
                     "exhaustive_cells": len(exhaustive.entries),
                     "mismatches": len(mismatches(formula, exhaustive)),
                     "formula_total": formula.total(), "exhaustive_total": exhaustive.total()})
    return rows


EXACT: dict[str, tuple[list[str], Callable[[dict], list[dict]]]] = {
    "tv_distance": (["q", "n", "r", "tv", "r_tv", "tv_approx", "max_r_tv", "argmax_r"], tv_rows),
    "distribution_audit": (["q", "n", "formula_cells", "exhaustive_cells", "mismatches",
                            "formula_total", "exhaustive_total"], audit_rows),
}


def columns_for(experiment: str) -> list[str]:
    if experiment in EXACT:
        return EXACT[experiment][0]
    return MONTE_CARLO[experiment].columns
