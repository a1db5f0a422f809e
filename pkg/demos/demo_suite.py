"""Walkthrough of the suite runner: config documents, deterministic runs,
report formats, and the negative control.

Run:  python3 demos/demo_suite.py
"""

from fractions import Fraction

from supercong.suite import (
    SuiteConfig,
    emit_report,
    parse_config,
    run_suite,
)

CONFIG_DOC = """\
# a small verification suite
schema_version = 1
statements = theorem1, conjecture
prime_max = 31
x_values = -1/3, 0, 4
oracle_mode = spot
"""


def main() -> None:
    print("== a config document parses into a validated SuiteConfig ==")
    cfg = parse_config(CONFIG_DOC)
    print(f"  statements: {cfg.statements}")
    print(f"  primes up to {cfg.prime_max}, oracle mode {cfg.oracle_mode!r}")

    print("\n== running it (scan order: statement, prime, argument) ==")
    summary = run_suite(cfg)
    print(f"  {summary.total} checks: {summary.passed} passed, "
          f"{summary.failed} failed, {summary.skipped} skipped")

    print("\n== the same records in TAP form (first lines) ==")
    for line in emit_report(summary, "tap").splitlines()[:5]:
        print(f"  {line}")

    print("\n== and as JSON Lines (first record) ==")
    print(f"  {emit_report(summary, 'jsonl').splitlines()[0]}")

    print("\n== hypothesis failures become skip records, not errors ==")
    skip_cfg = SuiteConfig(statements=("sun_s",), prime_min=5, prime_max=7,
                           x_values=(Fraction(-1, 2),))
    skip_summary = run_suite(skip_cfg)
    print(f"  excluded argument -1/2: {skip_summary.skipped} of "
          f"{skip_summary.total} checks skipped")
    print(f"  {emit_report(skip_summary, 'tap').splitlines()[1]}")

    print("\n== negative control: an off-by-p fault must be caught ==")
    bad_cfg = SuiteConfig(statements=("theorem1",), prime_max=7,
                          x_values=(Fraction(0),), inject_error=True)
    bad = run_suite(bad_cfg)
    print(f"  injected error: {bad.failed}/{bad.total} checks fail")
    for line in emit_report(bad, "human").splitlines():
        print(f"  {line}")


if __name__ == "__main__":
    main()
