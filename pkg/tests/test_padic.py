"""Tests for the p-adic arithmetic substrate."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jshadow._integers import primes_up_to
from jshadow.padic import (
    DEFAULT_PRECISION,
    PadicError,
    PadicNumber,
    PrecisionError,
    ZeroOperandError,
    embed,
    geometric_series_witness,
    is_topological_generator,
    padic_log,
    padic_norm,
    rezk_log_pi0,
    smallest_topological_generator,
    teichmuller,
    vp,
)

PRIMES_100 = primes_up_to(100)
ODD_PRIMES_50 = [p for p in primes_up_to(50) if p != 2]


# -- valuation and norm -------------------------------------------------


def test_vp_examples():
    assert vp(1, 7) == 0
    assert vp(12, 2) == 2
    assert vp(Fraction(1, 9), 3) == -2


def test_vp_rejects_zero_and_composite():
    with pytest.raises(ZeroOperandError):
        vp(0, 5)
    with pytest.raises(PadicError):
        vp(3, 6)


def test_padic_norm_examples():
    assert padic_norm(1, 5) == 1
    assert padic_norm(50, 5) == Fraction(1, 25)
    assert padic_norm(Fraction(3, 4), 2) == 4


@settings(max_examples=200)
@given(
    x=st.fractions(min_value=-1000, max_value=1000).filter(lambda f: f != 0),
    y=st.fractions(min_value=-1000, max_value=1000).filter(lambda f: f != 0),
    p=st.sampled_from(PRIMES_100),
)
def test_vp_and_norm_are_multiplicative(x, y, p):
    assert vp(x * y, p) == vp(x, p) + vp(y, p)
    assert padic_norm(x, p) * padic_norm(y, p) == padic_norm(x * y, p)


# -- embedding ----------------------------------------------------------


def test_embed_examples():
    one = embed(1, 3, 5)
    assert (one.valuation, one.unit_digits) == (0, 1)
    half = embed(Fraction(1, 2), 3, 3)
    assert (half.valuation, half.unit_digits) == (0, 14)  # 2*14 = 1 mod 27
    eighteen = embed(18, 3, 4)
    assert (eighteen.valuation, eighteen.unit_digits) == (2, 2)


def test_embed_rejects_zero_and_bad_precision():
    with pytest.raises(ZeroOperandError):
        embed(0, 3)
    with pytest.raises(PrecisionError):
        embed(1, 3, 0)
    with pytest.raises(PadicError):
        embed(1, 4, 5)


def test_from_unit_rejects_non_unit():
    with pytest.raises(PadicError):
        PadicNumber.from_unit(3, 0, 9, 4)


def test_canonical_equality():
    assert embed(10, 5, 4) == embed(10, 5, 4)
    assert embed(10, 5, 4) != embed(10, 5, 3)  # precision is part of the form
    assert embed(10, 5, 4) != embed(10, 7, 4)
    assert PadicNumber.zero(5, 4) == PadicNumber.zero(5, 4)
    assert PadicNumber.zero(5, 4) != embed(10, 5, 4)


# -- arithmetic ---------------------------------------------------------


def test_group_law_and_power():
    x = embed(2, 3, DEFAULT_PRECISION)
    assert x.inv() * x == embed(1, 3, DEFAULT_PRECISION)
    assert embed(4, 3, 6) ** 3 == embed(64, 3, 6)


def test_addition_renormalizes():
    s = embed(1, 5, 4) + embed(4, 5, 4)
    assert s.valuation == 1 and s.unit_digits == 1
    assert s.precision == 3  # one digit paid for the carry into 5^1


def test_addition_with_valuation_gap_caps_absolute_precision():
    x = embed(1, 5, 3)  # known mod 5^3
    y = embed(125, 5, 8)  # valuation 3, known mod 5^11
    s = x + y
    assert s.valuation == 0
    assert s.abs_precision == 3


def test_cancellation_gives_flagged_zero():
    x = embed(7, 5, 6)
    z = x - x
    assert z.is_zero
    assert z.abs_precision == 6
    with pytest.raises(ZeroOperandError):
        z.valuation
    with pytest.raises(ZeroOperandError):
        z.inv()


def test_zero_propagation():
    z = PadicNumber.zero(5, 4)
    x = embed(25, 5, 6)
    assert (z * x).is_zero and (z * x).abs_precision == 6  # 4 + v(x)
    assert (z + x) == x._cap_abs(4)
    with pytest.raises(ZeroOperandError):
        x / z


def test_mixed_prime_rejected():
    with pytest.raises(PadicError):
        embed(1, 3, 4) + embed(1, 5, 4)


def test_scalar_coercion():
    x = embed(10, 3, 8)
    assert x - 1 == embed(9, 3, 8)._cap_abs(8)
    assert x * 2 == embed(20, 3, 8)
    assert (2 * x).unit_digits == embed(20, 3, 8).unit_digits
    assert x + 0 == x


def test_roundtrip_against_exact_rationals():
    # arithmetic on embedded rationals = exact rational arithmetic mod p^prec
    rng = random.Random(20120531)
    precision = 16
    for _ in range(10000):
        p = rng.choice(PRIMES_100)
        x = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9999), rng.randint(1, 9999))
        y = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9999), rng.randint(1, 9999))
        a = embed(x, p, precision)
        b = embed(y, p, precision)
        for op, exact in (
            ("add", x + y),
            ("mul", x * y),
            ("div", x / y),
        ):
            got = {"add": a + b, "mul": a * b, "div": a / b}[op]
            if exact == 0:
                assert got.is_zero
            else:
                assert got == embed(exact, p, got.precision), (x, y, p, op)


# -- Teichmuller --------------------------------------------------------


def test_teichmuller_examples():
    assert teichmuller(1, 7, 10) == embed(1, 7, 10)
    for p in (3, 7, 11):
        minus_one = teichmuller(p - 1, p, 8)
        assert minus_one.unit_digits == p**8 - 1
    assert teichmuller(2, 5, 3).unit_digits == 57
    assert pow(57, 4, 125) == 1


def test_teichmuller_is_a_root_of_unity():
    precision = 16
    for p in ODD_PRIMES_50:
        m = p**precision
        for a in range(1, p):
            w = teichmuller(a, p, precision)
            assert w.unit_digits % p == a % p
            assert pow(w.unit_digits, p - 1, m) == 1


def test_teichmuller_rejects_bad_input():
    with pytest.raises(ZeroOperandError):
        teichmuller(10, 5, 8)
    with pytest.raises(PadicError):
        teichmuller(1, 2, 8)


# -- logarithm ----------------------------------------------------------


def test_log_of_one_is_zero():
    z = padic_log(embed(1, 3, 20))
    assert z.is_zero and z.abs_precision == 20


def test_log_leading_term_dominates():
    for p in ODD_PRIMES_50:
        assert padic_log(embed(1 + p, p, 20)).valuation == 1


def test_log_is_a_homomorphism():
    rng = random.Random(7)
    for _ in range(50):
        p = rng.choice(ODD_PRIMES_50)
        u = embed(1 + p * rng.randint(1, 50), p, 24)
        v = embed(1 + p * rng.randint(1, 50), p, 24)
        diff = padic_log(u * v) - (padic_log(u) + padic_log(v))
        assert diff.is_zero


def test_log_doubling_example():
    two_logs = padic_log(embed(4, 3, 20)) * 2
    log_square = padic_log(embed(16, 3, 20))
    assert (two_logs - log_square).is_zero


def test_log_against_exact_rational_series():
    # independent oracle: sum the alternating series with exact Fractions
    # and reduce mod p^N (denominators are prime to p for the kept terms)
    for p, u0, n in ((5, 6, 6), (3, 10, 8), (7, 8, 5)):
        t = u0 - 1
        total = Fraction(0)
        k = 1
        while True:
            term_valuation = k * vp(Fraction(t), p) - (vp(Fraction(k), p) if k % p == 0 else 0)
            if term_valuation >= n:
                break
            total += Fraction((-1) ** (k + 1) * t**k, k)
            k += 1
        m = p**n
        expected = total.numerator * pow(total.denominator, -1, m) % m
        got = padic_log(embed(u0, p, n))
        assert got.lifted_int() % m == expected


def test_precision_underflow_raises():
    tiny = PadicNumber.zero(5, 1)
    negative_valuation = embed(Fraction(1, 25), 5, 4)
    with pytest.raises(PrecisionError):
        tiny * negative_valuation  # would be known modulo 5^(-1)
    with pytest.raises(PrecisionError):
        embed(1, 5, 10**9)  # beyond the configured maximum


def test_log_rejects_non_one_units():
    with pytest.raises(PadicError):
        padic_log(embed(2, 3, 10))
    with pytest.raises(PadicError):
        padic_log(embed(3, 3, 10))
    with pytest.raises(PadicError):
        padic_log(embed(3, 2, 10))


# -- degree-zero logarithm ---------------------------------------------


def test_rezk_log_kills_teichmuller():
    for ell in (3, 5, 7):
        for a in range(1, ell):
            assert rezk_log_pi0(teichmuller(a, ell, 32)).is_zero


def test_rezk_log_of_one_plus_ell_is_a_unit():
    for ell in (3, 5, 7):
        value = rezk_log_pi0(embed(1 + ell, ell, 40))
        assert not value.is_zero
        assert value.valuation == 0


def test_rezk_log_lands_in_zl():
    rng = random.Random(11)
    for _ in range(100):
        ell = rng.choice([3, 5, 7, 11, 13])
        u = rng.randint(1, 10**6)
        if u % ell == 0:
            u += 1
        value = rezk_log_pi0(embed(u, ell, 32))
        assert value.is_zero or value.valuation >= 0


def test_rezk_log_ignores_teichmuller_part():
    ell = 7
    x = embed(10, ell, 32)
    w = teichmuller(10 % ell, ell, 32)
    assert rezk_log_pi0(x * w.inv()) == rezk_log_pi0(x)


def test_rezk_log_rejects_non_units():
    with pytest.raises(PadicError):
        rezk_log_pi0(embed(3, 3, 10))
    with pytest.raises(ZeroOperandError):
        rezk_log_pi0(PadicNumber.zero(3, 10))


# -- topological generators ---------------------------------------------


def test_generator_examples():
    assert not is_topological_generator(1, 5)
    assert is_topological_generator(2, 3)
    assert not is_topological_generator(7, 5)  # 7^4 - 1 = 2400 has v_5 = 2


def test_generator_depends_only_on_u_mod_ell_squared():
    for ell in (3, 5, 7, 11):
        for u in range(2, 40):
            if u % ell == 0:
                continue
            base = is_topological_generator(u, ell)
            for t in (1, 2, 5):
                assert is_topological_generator(u + ell * ell * t, ell) == base


def test_generator_rejections():
    with pytest.raises(ZeroOperandError):
        is_topological_generator(10, 5)
    with pytest.raises(PadicError):
        is_topological_generator(3, 2)


def test_smallest_generator_is_a_generator():
    for ell in ODD_PRIMES_50:
        u = smallest_topological_generator(ell)
        assert is_topological_generator(u, ell)
        for smaller in range(2, u):
            assert not is_topological_generator(smaller, ell)


# -- geometric series witness -------------------------------------------


def test_geometric_series_witness_examples():
    assert geometric_series_witness(3, 1)
    s5 = sum(3**i for i in range(5))
    assert s5 == 121 and 2 * s5 + 1 == 3**5
    assert geometric_series_witness(3, 5)
    assert geometric_series_witness(3, 64)


def test_geometric_series_witness_other_primes():
    assert geometric_series_witness(5, 30)
    assert geometric_series_witness(7, 30)


def test_geometric_series_witness_rejects_bad_depth():
    with pytest.raises(ValueError):
        geometric_series_witness(3, 0)
