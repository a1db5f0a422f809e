"""Suite orchestration: which statements, which primes, which arguments.

A suite is a list of (statement, p, x) tasks executed in a deterministic
scan order (statement, then prime ascending, then x in configured order).
Engine-level hypothesis failures become skip records rather than errors, so
a run over a blanket grid is meaningful; genuine disagreements — including
fast-path/oracle mismatches — become failing records.  Records can be
streamed to a JSON Lines file as they complete, which makes an interrupted
run's log a prefix of the completed run's log.
"""

from __future__ import annotations

import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from time import perf_counter_ns
from typing import Callable, Iterator, Optional, Sequence

from . import congruences as cg
from . import identities as ident
from .core import (
    HypothesisViolatedError,
    NonPIntegralError,
    OracleMismatchError,
    RegimeError,
    Residue,
    SupercongError,
    odd_primes,
)
from .congruences import CongruenceReport
from .sequences import pfaff_check


class ParseError(SupercongError):
    """Malformed suite configuration; message carries line/field context."""


@dataclass(frozen=True)
class StatementSpec:
    id: str
    needs_x: bool
    min_p: int
    default_pmax: int
    reflects: bool = False       # apply x -> -1-x when m > (p-1)/2
    strict_regime: bool = False  # skip when even reflection leaves m = (p-1)/2


# Registry order is the canonical scan order for the "all" suite.
STATEMENTS: dict[str, StatementSpec] = {
    s.id: s
    for s in (
        StatementSpec("theorem1", True, 3, 500),
        StatementSpec("theorem2", True, 3, 500),
        StatementSpec("weighted_8n5", False, 3, 500),
        StatementSpec("weighted_32n21", False, 3, 500),
        StatementSpec("weighted_18n7", False, 5, 500),
        StatementSpec("weighted_72n49", False, 5, 500),
        StatementSpec("kw", False, 3, 100),
        StatementSpec("sun_s", True, 5, 500),
        StatementSpec("lemma21", True, 3, 50, reflects=True),
        StatementSpec("lemma23", True, 3, 50, reflects=True, strict_regime=True),
        StatementSpec("lemma24", True, 3, 50, reflects=True, strict_regime=True),
        StatementSpec("lemma33", True, 3, 50, reflects=True, strict_regime=True),
        StatementSpec("lemma34", True, 3, 50, reflects=True, strict_regime=True),
        StatementSpec("blocks", True, 3, 50, reflects=True, strict_regime=True),
        StatementSpec("blocks_weighted", True, 3, 50, reflects=True,
                      strict_regime=True),
        StatementSpec("residue_table", False, 5, 500),
    )
}

STATEMENT_ALIASES: dict[str, tuple[str, ...]] = {
    "conjecture": ("weighted_8n5", "weighted_32n21", "weighted_18n7",
                   "weighted_72n49"),
    "all": tuple(STATEMENTS),
}

OUT_DIR_ENV = "SUPERCONG_OUT_DIR"
ORACLE_MODES = ("off", "spot", "full")
_X_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_x(text: str) -> Fraction:
    """Parse the CLI/config rational syntax: optional sign, a or a/b."""
    text = text.strip()
    if not _X_RE.match(text):
        raise ParseError(f"bad rational {text!r}: expected a or a/b")
    return Fraction(text)


def expand_statements(names: Sequence[str]) -> tuple[str, ...]:
    out: list[str] = []
    for name in names:
        ids = STATEMENT_ALIASES.get(name, (name,))
        for sid in ids:
            if sid not in STATEMENTS:
                known = ", ".join(list(STATEMENTS) + list(STATEMENT_ALIASES))
                raise ParseError(f"unknown statement {name!r} (known: {known})")
            if sid not in out:
                out.append(sid)
    if not out:
        raise ParseError("no statements selected")
    return tuple(out)


@dataclass
class SuiteConfig:
    """Declarative description of one verification run."""

    statements: tuple[str, ...] = STATEMENT_ALIASES["all"]
    prime_min: int = 3
    prime_max: Optional[int] = None  # None: per-statement default cap
    x_values: Optional[tuple[Fraction, ...]] = None  # None: default grid
    oracle_mode: str = "off"
    parallelism: int = 1
    output_path: Optional[str] = None
    inject_error: bool = False

    def validate(self) -> None:
        self.statements = expand_statements(self.statements)
        if self.prime_min < 3:
            raise ParseError(f"prime_min = {self.prime_min} < 3")
        if self.prime_max is not None and self.prime_max < self.prime_min:
            raise ParseError(
                f"prime_max = {self.prime_max} < prime_min = {self.prime_min}")
        if self.oracle_mode not in ORACLE_MODES:
            raise ParseError(f"oracle_mode must be one of {ORACLE_MODES}")
        if self.parallelism < 1:
            raise ParseError(f"parallelism = {self.parallelism} < 1")


_CONFIG_KEYS = ("schema_version", "statements", "prime_min", "prime_max",
                "x_values", "oracle_mode", "parallelism", "output_path",
                "inject_error")


def parse_config(text: str) -> SuiteConfig:
    """Parse the flat key-value suite format (one `key = value` per line,
    '#' lines are comments; lists are comma-separated)."""
    cfg = SuiteConfig()
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        try:
            if key == "schema_version":
                if value != "1":
                    raise ParseError(f"unsupported schema_version {value!r}")
            elif key == "statements":
                cfg.statements = tuple(
                    s.strip() for s in value.split(",") if s.strip())
            elif key in ("prime_min", "prime_max", "parallelism"):
                setattr(cfg, key, int(value))
            elif key == "x_values":
                cfg.x_values = tuple(
                    parse_x(s) for s in value.split(",") if s.strip())
            elif key == "oracle_mode":
                cfg.oracle_mode = value
            elif key == "output_path":
                cfg.output_path = value
            elif key == "inject_error":
                if value not in ("true", "false"):
                    raise ParseError("inject_error must be true or false")
                cfg.inject_error = value == "true"
        except ValueError as e:
            raise ParseError(f"line {lineno}: {e}") from None
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e}") from None
    cfg.validate()
    return cfg


@dataclass
class RunSummary:
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    reports: list[CongruenceReport] = field(default_factory=list)

    @property
    def failures(self) -> list[CongruenceReport]:
        return [r for r in self.reports if r.passed is False]

    def add(self, report: CongruenceReport) -> None:
        self.reports.append(report)
        self.total += 1
        if report.passed is None:
            self.skipped += 1
        elif report.passed:
            self.passed += 1
        else:
            self.failed += 1


def _dispatch(sid: str, p: int, x: Optional[Fraction],
              oracle: str) -> CongruenceReport:
    spec = STATEMENTS[sid]
    if p < spec.min_p:
        raise HypothesisViolatedError(f"{sid} requires p >= {spec.min_p}")
    if spec.reflects:
        px = cg.padic_split(x, p)
        if px.m > (p - 1) // 2:
            px = px.reflect()
        if spec.strict_regime and px.m == (p - 1) // 2:
            raise RegimeError(
                "m = (p-1)/2 for both x and -1-x; outside the stated regime")
        x = px.x
    if sid == "theorem1":
        return cg.theorem1_check(p, x, oracle)
    if sid == "theorem2":
        return cg.theorem2_check(p, x, oracle)
    if sid in cg.CONJECTURE_CASES:
        return cg.conjecture_check(sid, p, oracle)
    if sid == "kw":
        return cg.kw_check(p, oracle)
    if sid == "sun_s":
        return cg.sun_s_check(p, x, oracle)
    t0 = perf_counter_ns()
    if sid == "lemma21":
        ok = cg.lemma21_all(p, x)
    elif sid == "lemma23":
        return cg.lemma23_check(p, x)
    elif sid == "lemma24":
        return cg.lemma24_check(p, x)
    elif sid == "lemma33":
        return cg.lemma33_check(p, x)
    elif sid == "lemma34":
        return cg.lemma34_check(p, x)
    elif sid == "blocks":
        ok = cg.block_vanishing_check(p, x, weighted=False)
    elif sid == "blocks_weighted":
        ok = cg.block_vanishing_check(p, x, weighted=True)
    elif sid == "residue_table":
        ok = cg.residue_table_check(p)
    else:  # pragma: no cover - registry and dispatch must stay in sync
        raise SupercongError(f"no dispatch rule for statement {sid!r}")
    micros = (perf_counter_ns() - t0) // 1000
    return CongruenceReport(sid, p, x, None, None, ok, None, micros)


def run_check(sid: str, p: int, x: Optional[Fraction] = None,
              oracle: str = "off", inject_error: bool = False) -> CongruenceReport:
    """One task: dispatch, convert hypothesis failures to skips, and apply
    the optional off-by-p fault injection to the expected residue."""
    t0 = perf_counter_ns()
    try:
        report = _dispatch(sid, p, x, oracle)
    except (HypothesisViolatedError, NonPIntegralError, RegimeError) as e:
        micros = (perf_counter_ns() - t0) // 1000
        return CongruenceReport(sid, p, x, None, None, None, str(e), micros)
    except OracleMismatchError as e:
        micros = (perf_counter_ns() - t0) // 1000
        return CongruenceReport(sid, p, x, None, None, False,
                                f"oracle mismatch: {e}", micros)
    if inject_error and report.rhs is not None:
        bumped = Residue(report.rhs.value + p, report.rhs.modulus)
        report = CongruenceReport(report.statement, report.p, report.x,
                                  report.lhs, bumped, report.lhs == bumped,
                                  report.skipped_reason, report.micros)
    return report


def _task_args(cfg: SuiteConfig) -> Iterator[tuple[str, int, Optional[Fraction], str, bool]]:
    for sid in cfg.statements:
        spec = STATEMENTS[sid]
        pmax = cfg.prime_max if cfg.prime_max is not None else spec.default_pmax
        for p in odd_primes(max(cfg.prime_min, spec.min_p), pmax):
            if not spec.needs_x:
                yield sid, p, None, cfg.oracle_mode, cfg.inject_error
                continue
            if cfg.x_values is not None:
                xs: tuple[Fraction, ...] = cfg.x_values
            else:
                xs = cg.default_x_grid(p)
                if sid == "theorem2":
                    # probe the t-independence of the 2x = -1 (mod p) branch
                    xs = xs + (Fraction(-1, 2) + p,)
            for x in xs:
                yield sid, p, x, cfg.oracle_mode, cfg.inject_error


def _run_task(args: tuple[str, int, Optional[Fraction], str, bool]) -> CongruenceReport:
    sid, p, x, oracle, inject = args
    return run_check(sid, p, x, oracle, inject)


def report_record(report: CongruenceReport) -> dict:
    """The fixed JSONL field set; residues as decimal strings."""
    modulus = report.lhs.modulus if report.lhs is not None else (
        report.rhs.modulus if report.rhs is not None else None)
    return {
        "statement": report.statement,
        "p": report.p,
        "x": None if report.x is None else str(report.x),
        "lhs": None if report.lhs is None else str(report.lhs.value),
        "rhs": None if report.rhs is None else str(report.rhs.value),
        "modulus": None if modulus is None else str(modulus),
        "pass": report.passed,
        "skipped_reason": report.skipped_reason,
        "micros": report.micros,
    }


def resolve_output_path(path: "str | os.PathLike[str]") -> Path:
    """Relative output paths land in $SUPERCONG_OUT_DIR (default: cwd)."""
    p = Path(path)
    if p.is_absolute():
        return p
    return Path(os.environ.get(OUT_DIR_ENV, ".")) / p


def run_suite(cfg: SuiteConfig) -> RunSummary:
    """Execute every task of the config in deterministic scan order.

    Tasks run on a process pool when cfg.parallelism > 1; results are
    consumed and persisted in task order regardless, so logs from equal
    configs are identical apart from the timing field.
    """
    cfg.validate()
    tasks = list(_task_args(cfg))
    summary = RunSummary()
    sink = None
    if cfg.output_path is not None:
        out = resolve_output_path(cfg.output_path)
        out.parent.mkdir(parents=True, exist_ok=True)
        sink = open(out, "a", encoding="utf-8")
    try:
        if cfg.parallelism > 1 and len(tasks) > 1:
            chunk = max(1, min(32, len(tasks) // (cfg.parallelism * 4) or 1))
            with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
                results = pool.map(_run_task, tasks, chunksize=chunk)
                for report in results:
                    summary.add(report)
                    if sink is not None:
                        sink.write(json.dumps(report_record(report)) + "\n")
                        sink.flush()
        else:
            for args in tasks:
                report = _run_task(args)
                summary.add(report)
                if sink is not None:
                    sink.write(json.dumps(report_record(report)) + "\n")
                    sink.flush()
    finally:
        if sink is not None:
            sink.close()
    return summary


def _describe(report: CongruenceReport) -> str:
    parts = [report.statement, f"p={report.p}"]
    if report.x is not None:
        parts.append(f"x={report.x}")
    return " ".join(parts)


def emit_report(summary: RunSummary, format: str = "human") -> str:
    """Serialize a summary; 'jsonl' and 'tap' are deterministic apart from
    the micros timing field."""
    if format == "jsonl":
        return "\n".join(json.dumps(report_record(r)) for r in summary.reports)
    if format == "tap":
        lines = [f"1..{summary.total}"]
        for i, r in enumerate(summary.reports, start=1):
            if r.passed is None:
                lines.append(f"ok {i} - {_describe(r)} # SKIP {r.skipped_reason}")
            elif r.passed:
                lines.append(f"ok {i} - {_describe(r)}")
            else:
                lines.append(f"not ok {i} - {_describe(r)}")
        return "\n".join(lines)
    if format == "human":
        lines = [
            f"checks: {summary.total}  passed: {summary.passed}  "
            f"failed: {summary.failed}  skipped: {summary.skipped}"
        ]
        for r in summary.failures:
            detail = (f"lhs={r.lhs.value} rhs={r.rhs.value} "
                      f"mod {r.lhs.modulus}" if r.lhs is not None
                      and r.rhs is not None else (r.skipped_reason or
                                                  "structural check false"))
            lines.append(f"FAIL {_describe(r)}: {detail}")
        if summary.failed == 0 and summary.total:
            lines.append("all checks passed")
        return "\n".join(lines)
    raise ValueError(f"unknown report format {format!r}")


# ---------------------------------------------------------------------------
# the exact identity suite (closed forms and support identities)

def _seeded_rationals(seed: int, count: int, den_max: int = 9,
                      num_bound: int = 30) -> list[Fraction]:
    from random import Random
    rng = Random(seed)
    out: list[Fraction] = []
    seen: set[Fraction] = set()
    while len(out) < count:
        q = Fraction(rng.randint(-num_bound, num_bound),
                     rng.randint(1, den_max))
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


def _check_closed_forms(nmax: int) -> bool:
    return all(
        ident.lemma22_double_sum(n) == ident.lemma22_closed(n)
        and ident.lemma32_double_sum(n) == ident.lemma32_closed(n)
        for n in range(nmax + 1))


def _check_pfd(nmax: int) -> bool:
    for n in range(min(nmax, 20) + 1):
        for x in _seeded_rationals(7919 * n + 17, 20):
            if x.denominator == 1 and -n <= x <= 0:
                continue
            if not ident.pfd_check(n, x):
                return False
        # special points: zeros at x = 1..n, closed value at x = n+1
        for k in range(n):
            lhs, rhs = ident.pfd_sides(n, k + 1)
            if lhs != 0 or rhs != 0:
                return False
        lhs, rhs = ident.pfd_sides(n, n + 1)
        expected = Fraction((-1) ** n, (2 * n + 1) * comb(2 * n, n))
        if lhs != rhs or lhs != expected:
            return False
    return True


def _check_pfaff(nmax: int) -> bool:
    for n in range(min(nmax, 30) + 1):
        points = _seeded_rationals(104729 * n + 3, max(n + 1, 20))
        points += [Fraction(17, 5), Fraction(1, 2)]
        if not all(pfaff_check(n, z) for z in points):
            return False
    return True


def _check_pfaff_derivative(nmax: int) -> bool:
    for n in range(1, min(nmax, 25) + 1):
        points = _seeded_rationals(15485863 * n + 11, max(n, 20))
        points += [Fraction(3, 7), Fraction(-2)]
        if not all(ident.pfaff_derivative_check(n, z) for z in points):
            return False
    return True


def _check_inner_sums(bound: int = 15) -> bool:
    return all(
        ident.liu22_sum(k, l) == ident.liu22_closed(k, l)
        and ident.lemma31_sum(k, l) == ident.lemma31_closed(k, l)
        for k in range(bound + 1) for l in range(bound + 1))


def _check_convolutions() -> bool:
    for N in range(1, 13):
        for k in range(9):
            for l in range(9):
                lhs, rhs = ident.binom_conv_sum(N, k, l)
                if lhs != rhs:
                    return False
                lhs, rhs = ident.weighted_binom_conv_sum(N, k, l)
                if lhs != rhs:
                    return False
    for N in odd_primes(3, 31):
        for k in range(N):
            for l in range(N):
                lhs, rhs = ident.binom_conv_sum(N, k, l)
                if lhs != rhs:
                    return False
                lhs, rhs = ident.weighted_binom_conv_sum(N, k, l)
                if lhs != rhs:
                    return False
    return True


def identity_suite(nmax: int = 40) -> list[tuple[str, bool]]:
    """Run the whole identity battery; one (name, ok) entry per family."""
    checks: list[tuple[str, Callable[[], bool]]] = [
        (f"closed_form_double_sums n<={nmax}", lambda: _check_closed_forms(nmax)),
        ("partial_fractions n<=20, 20 points/n", lambda: _check_pfd(nmax)),
        ("pfaff_reflection n<=30, >deg points", lambda: _check_pfaff(nmax)),
        ("pfaff_derivative n<=25, >deg points",
         lambda: _check_pfaff_derivative(nmax)),
        ("inner_sums k,l<=15", _check_inner_sums),
        ("binomial_convolutions N<=12 and prime N<=31", _check_convolutions),
    ]
    return [(name, fn()) for name, fn in checks]
