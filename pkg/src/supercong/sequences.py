"""The binomial double-product sequences: exact values and residue tables.

Two evaluation routes are kept strictly separate on purpose.  The fast route
works entirely mod p^e: pair weights C(x,k) C(x+k,k) c^k are produced by a
multiplicative k-recurrence (k < p keeps every step invertible) and combined
with an in-place Pascal row, giving a full n in [0, p-1] table in O(p^2)
residue multiplications.  The slow route evaluates the same sums over exact
Fractions and only reduces at the very end; it exists solely to audit the
fast route and is never consulted to produce a result.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .core import (
    DegenerateError,
    NonPIntegralError,
    OracleMismatchError,
    RationalLike,
    Residue,
    binom_gen,
    mod_reduce,
    require_odd_prime,
    to_fraction,
)

# sequence family -> multiplier c in sum_k C(n,k) C(x,k) C(x+k,k) c^k
T_MULT = 2
S_MULT = 1


@lru_cache(maxsize=512)
def _pair_weights_exact(x: Fraction, kmax: int, mult: int) -> tuple[Fraction, ...]:
    """w_k = C(x,k) C(x+k,k) mult^k for k in [0, kmax], exact."""
    out = [Fraction(1)]
    falling = Fraction(1)  # C(x, k)
    rising = Fraction(1)  # C(x+k, k)
    scale = 1
    for k in range(1, kmax + 1):
        falling *= Fraction(x - k + 1, k)
        rising *= Fraction(x + k, k)
        scale *= mult
        out.append(falling * rising * scale)
    return tuple(out)


def _row_exact(n: int, x: Fraction, mult: int) -> Fraction:
    w = _pair_weights_exact(x, n, mult)
    return sum((comb(n, k) * w[k] for k in range(n + 1)), Fraction(0))


def t_seq(n: int, x: RationalLike) -> Fraction:
    """t_n(x) = sum_k C(n,k) C(x,k) C(x+k,k) 2^k as an exact rational."""
    if n < 0:
        raise ValueError("t_seq requires n >= 0")
    return _row_exact(n, to_fraction(x), T_MULT)


def s_seq(n: int, x: RationalLike) -> Fraction:
    """s_n(x) = sum_k C(n,k) C(x,k) C(x+k,k), the unweighted companion sum."""
    if n < 0:
        raise ValueError("s_seq requires n >= 0")
    return _row_exact(n, to_fraction(x), S_MULT)


def j2(n: int) -> Fraction:
    """The half-integer specialization s_n(-1/2)."""
    return s_seq(n, Fraction(-1, 2))


def S_poly(n: int, x: RationalLike, y: RationalLike) -> Fraction:
    """sum_k C(n,k) C(x,k) C(-1-x,k) y^k, evaluated term by term.

    Since C(-1-x,k) (-1)^k = C(x+k,k), this equals the pair-weight sum with
    multiplier -y; t_seq is S_poly(n, x, -2) and s_seq is S_poly(n, x, -1).
    The definition is kept literal here so tests can confirm that collapse.
    """
    if n < 0:
        raise ValueError("S_poly requires n >= 0")
    x = to_fraction(x)
    y = to_fraction(y)
    total = Fraction(0)
    ypow = Fraction(1)
    for k in range(n + 1):
        total += comb(n, k) * binom_gen(x, k) * binom_gen(-1 - x, k) * ypow
        ypow *= y
    return total


def t_symmetry_check(n: int, x: RationalLike) -> bool:
    """Exact check of the reflection invariance t_n(x) = t_n(-1-x)."""
    x = to_fraction(x)
    return t_seq(n, x) == t_seq(n, -1 - x)


def pfaff_check(n: int, z: RationalLike) -> bool:
    """Pfaff reflection for the pair weights, checked exactly at one point:

    sum_k C(n,k) C(n+k,k) (-z)^k == (-1)^n sum_k C(n,k) C(n+k,k) (z-1)^k.
    """
    if n < 0:
        raise ValueError("pfaff_check requires n >= 0")
    z = to_fraction(z)
    lhs = Fraction(0)
    rhs = Fraction(0)
    lpow = Fraction(1)
    rpow = Fraction(1)
    for k in range(n + 1):
        c = comb(n, k) * comb(n + k, k)
        lhs += c * lpow
        rhs += c * rpow
        lpow *= -z
        rpow *= z - 1
    if n % 2:
        rhs = -rhs
    return lhs == rhs


@dataclass(frozen=True)
class SequenceTable:
    """Residues of one sequence family mod p^e for every row n in [0, p-1]."""

    p: int
    e: int
    x: Fraction
    mult: int
    values: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p**self.e

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def residue(self, n: int) -> Residue:
        return Residue(self.values[n], self.modulus)


@lru_cache(maxsize=4096)
def _pair_weights_mod(p: int, e: int, x: Fraction, mult: int) -> tuple[int, ...]:
    """w_k = C(x,k) C(x+k,k) mult^k mod p^e for k in [0, p-1].

    Incremental update w_k = w_{k-1} * mult * (x-k+1)(x+k) / k^2; every
    k in [1, p-1] is invertible mod p^e, so the recurrence never divides
    by a multiple of p.
    """
    mod = p**e
    if x.denominator % p == 0:
        raise NonPIntegralError(f"{x} is not {p}-integral")
    xr = x.numerator % mod * pow(x.denominator, -1, mod) % mod
    w = [0] * p
    w[0] = 1
    cur = 1
    for k in range(1, p):
        try:
            inv_kk = pow(k * k, -1, mod)
        except ValueError:  # unreachable for k < p; kept as a hard guard
            raise DegenerateError(f"k = {k} has no inverse mod {mod}") from None
        cur = cur * (mult * (xr - k + 1) * (xr + k)) % mod
        cur = cur * inv_kk % mod
        w[k] = cur
    return tuple(w)


@lru_cache(maxsize=4096)
def _table_values(p: int, e: int, x: Fraction, mult: int) -> tuple[int, ...]:
    mod = p**e
    w = _pair_weights_mod(p, e, x, mult)
    vals = [0] * p
    row = [0] * p  # C(n, k) mod p^e, updated in place as n grows
    row[0] = 1
    for n in range(p):
        if n:
            for k in range(n, 0, -1):
                row[k] = (row[k] + row[k - 1]) % mod
        acc = 0
        for k in range(n + 1):
            acc += row[k] * w[k]
        vals[n] = acc % mod
    return tuple(vals)


# oracle row audit: full table for small p, else 5 deterministic spot rows
_SPOT_ROWS = 5
_FULL_BELOW = 50


def _oracle_rows(p: int, e: int, x: Fraction, mult: int, mode: str) -> list[int]:
    if mode == "full" or (mode == "spot" and p <= _FULL_BELOW):
        return list(range(p))
    if mode == "spot":
        seed = ((p * 1_000_003 + e) * 1_000_003
                + x.numerator % 999_999_937) * 1_000_003 \
            + x.denominator * 7 + mult
        rng = random.Random(seed)
        return sorted(rng.sample(range(p), min(_SPOT_ROWS, p)))
    raise ValueError(f"unknown oracle mode {mode!r}")


def _audit_table(p: int, e: int, x: Fraction, mult: int,
                 values: tuple[int, ...], mode: str) -> None:
    rows = _oracle_rows(p, e, x, mult, mode)
    w = _pair_weights_exact(x, max(rows), mult)
    for n in rows:
        exact = sum((comb(n, k) * w[k] for k in range(n + 1)), Fraction(0))
        expect = mod_reduce(exact, p, e).value
        if expect != values[n]:
            raise OracleMismatchError(
                f"table row n={n} (p={p}, e={e}, x={x}, mult={mult}): "
                f"fast path {values[n]} != exact {expect} (mod {p**e})"
            )


def _build_table(p: int, e: int, x: RationalLike, mult: int,
                 oracle: str) -> SequenceTable:
    require_odd_prime(p)
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"exponent e = {e!r} must be a positive integer")
    x = to_fraction(x)
    values = _table_values(p, e, x, mult)
    if oracle != "off":
        _audit_table(p, e, x, mult, values, oracle)
    return SequenceTable(p, e, x, mult, values)


def t_table_mod(p: int, e: int, x: RationalLike,
                oracle: str = "off") -> SequenceTable:
    """Table of t_n(x) mod p^e for n in [0, p-1].

    oracle='off' trusts the fast path; 'spot' re-derives five deterministic
    rows (all rows when p <= 50) from exact rationals; 'full' re-derives
    every row.  A disagreement raises OracleMismatchError.
    """
    return _build_table(p, e, x, T_MULT, oracle)


def s_table_mod(p: int, e: int, x: RationalLike,
                oracle: str = "off") -> SequenceTable:
    """Table of s_n(x) mod p^e for n in [0, p-1]; same oracle contract."""
    return _build_table(p, e, x, S_MULT, oracle)
