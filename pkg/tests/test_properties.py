from fractions import Fraction

from hypothesis import given, settings, strategies as st

from supercong.congruences import padic_split
from supercong.core import Residue, binom_gen, binom_int, mod_reduce
from supercong.sequences import pfaff_check, t_symmetry_check
from supercong.suite import parse_x

small_primes = st.sampled_from((3, 5, 7, 11))
exponents = st.sampled_from((1, 2, 3))


def p_integral(p: int, num_bound: int = 1000, den_bound: int = 60):
    return st.builds(
        Fraction,
        st.integers(-num_bound, num_bound),
        st.integers(1, den_bound).filter(lambda d: d % p != 0),
    ).filter(lambda q: q.denominator % p != 0)


@given(small_primes, exponents, st.data())
@settings(deadline=None)
def test_mod_reduce_is_a_ring_morphism(p, e, data):
    a = data.draw(p_integral(p))
    b = data.draw(p_integral(p))
    ra, rb = mod_reduce(a, p, e), mod_reduce(b, p, e)
    assert mod_reduce(a + b, p, e) == ra + rb
    assert mod_reduce(a - b, p, e) == ra - rb
    assert mod_reduce(a * b, p, e) == ra * rb


@given(small_primes, st.data())
@settings(deadline=None)
def test_padic_split_round_trip(p, data):
    m = data.draw(st.integers(0, p - 1))
    t = data.draw(p_integral(p))
    px = padic_split(m + p * t, p)
    assert (px.m, px.t) == (m, t)


@given(st.integers(1, 80), st.integers(0, 80))
def test_pascal_identity(n, k):
    assert binom_int(n, k) == binom_int(n - 1, k - 1) + binom_int(n - 1, k)


@given(st.integers(0, 60), st.integers(0, 65))
def test_binom_gen_matches_integer_binomials(x, k):
    assert binom_gen(Fraction(x), k) == binom_int(x, k)


@given(st.integers(0, 12),
       st.fractions(min_value=-30, max_value=30, max_denominator=12))
@settings(deadline=None)
def test_pfaff_reflection_everywhere(n, z):
    assert pfaff_check(n, z)


@given(st.integers(0, 14),
       st.fractions(min_value=-30, max_value=30, max_denominator=12))
@settings(deadline=None)
def test_t_reflection_everywhere(n, x):
    assert t_symmetry_check(n, x)


@given(small_primes, exponents, st.integers(-500, 500), st.integers(-500, 500))
def test_residue_arithmetic_matches_integers(p, e, a, b):
    mod = p**e
    ra, rb = Residue(a % mod, mod), Residue(b % mod, mod)
    assert (ra + rb).value == (a + b) % mod
    assert (ra - rb).value == (a - b) % mod
    assert (ra * rb).value == (a * b) % mod
    assert (ra**3).value == pow(a, 3, mod)


@given(st.fractions(min_value=-100, max_value=100, max_denominator=40))
def test_parse_x_round_trips_fraction_strings(q):
    assert parse_x(str(q)) == q
