"""Tests for Bernoulli machinery, group orders, and the consistency checks."""

from fractions import Fraction

import pytest

from jshadow._integers import primes_up_to, vp_int
from jshadow.imj import (
    GroupOrderReport,
    bernoulli,
    imj_consistency_check,
    imj_order,
    k1_sphere_order,
    k_finite_field,
    norm_identity_check,
    surjectivity_check,
    unit_factor_check,
    von_staudt_clausen_denominator,
)
from jshadow.padic import is_topological_generator, smallest_topological_generator

ODD_PRIMES_97 = [p for p in primes_up_to(97) if p != 2]


# -- independent Bernoulli oracle ----------------------------------------


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa triangle (yields B_1 = +1/2; flip it)."""
    row = [Fraction(1, m + 1) for m in range(n + 1)]
    for m in range(1, n + 1):
        for j in range(n + 1 - m):
            row[j] = (j + 1) * (row[j] - row[j + 1])
    value = row[0]
    return -value if n == 1 else value


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_against_akiyama_tanigawa():
    for n in range(0, 40):
        assert bernoulli(n) == bernoulli_akiyama_tanigawa(n), n


def test_b2_against_sum_of_squares():
    # sum_{i<m} i^2 = m^3/3 - m^2/2 + B_2 * m, pinning B_2 = 1/6
    b2 = bernoulli(2)
    for m in (1, 2, 10, 101):
        lhs = sum(i * i for i in range(m))
        assert lhs == Fraction(m**3, 3) - Fraction(m**2, 2) + b2 * m


def test_bernoulli_odd_vanishing_and_squarefree_denominators():
    for n in range(3, 61, 2):
        assert bernoulli(n) == 0
    for n in range(2, 61, 2):
        den = bernoulli(n).denominator
        for p, e in [(p, vp_int(den, p)) for p in primes_up_to(den) if den % p == 0]:
            assert e == 1, (n, p)


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_von_staudt_clausen_examples():
    assert von_staudt_clausen_denominator(2) == 6
    assert von_staudt_clausen_denominator(4) == 30
    assert von_staudt_clausen_denominator(12) == 2730
    with pytest.raises(ValueError):
        von_staudt_clausen_denominator(3)
    with pytest.raises(ValueError):
        von_staudt_clausen_denominator(0)


def test_denominators_match_von_staudt_clausen():
    for n in range(2, 61, 2):
        assert bernoulli(n).denominator == von_staudt_clausen_denominator(n)


# -- image-of-J orders -----------------------------------------------------


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def test_imj_order_examples():
    assert imj_order(1).order == 24 and odd_part(24) == 3
    assert imj_order(2).order == 240 and odd_part(240) == 15
    assert imj_order(3).order == 504 and odd_part(504) == 63
    with pytest.raises(ValueError):
        imj_order(0)


def test_imj_order_factorization_multiplies_back():
    for k in range(1, 25):
        report = imj_order(k)
        product = 1
        for p, e in report.factors:
            product *= p**e
        assert product == report.order


def test_imj_order_odd_part_agrees_with_b2k_over_k():
    for k in range(1, 31):
        assert odd_part(imj_order(k).order) == odd_part(
            (bernoulli(2 * k) / k).denominator
        )


def test_group_order_report_helpers():
    report = GroupOrderReport.finite(24)
    assert report.part(2) == 8 and report.part(3) == 3 and report.part(5) == 1
    assert report.describe() == "Z/24"
    assert GroupOrderReport.infinite_cyclic().describe() == "Z"
    assert GroupOrderReport.finite(1).describe() == "0"


# -- K(1)-local sphere orders ----------------------------------------------


def test_k1_sphere_order_examples():
    assert k1_sphere_order(3, 1, 2).order == 1
    assert k1_sphere_order(3, 2, 2).order == 3
    assert k1_sphere_order(5, 4, 2).order == 5


def test_k1_sphere_order_rejects_bad_input():
    with pytest.raises(ValueError):
        k1_sphere_order(3, 0)
    with pytest.raises(ValueError):
        k1_sphere_order(2, 1)
    with pytest.raises(ValueError):
        k1_sphere_order(5, 1, generator=7)  # not a topological generator


def first_generators(ell: int, count: int = 3) -> list[int]:
    out = []
    u = 2
    while len(out) < count:
        if u % ell and is_topological_generator(u, ell):
            out.append(u)
        u += 1
    return out


def test_k1_sphere_order_independent_of_generator():
    for ell in ODD_PRIMES_97:
        for k in list(range(1, 21)) + [ell - 1, 2 * (ell - 1), 60]:
            orders = {
                k1_sphere_order(ell, k, u).order for u in first_generators(ell)
            }
            assert len(orders) == 1, (ell, k)


def test_k1_sphere_order_even_in_k():
    for ell in (3, 5, 7, 11, 13):
        for k in range(1, 61):
            assert k1_sphere_order(ell, k).order == k1_sphere_order(ell, -k).order


def test_k1_sphere_order_closed_form():
    for ell in (3, 5, 7, 11):
        for k in range(1, 61):
            result = k1_sphere_order(ell, k)
            if k % (ell - 1) == 0:
                assert result.order == ell ** (1 + vp_int(k, ell))
            else:
                assert result.order == 1


def test_k1_sphere_order_trivial_in_odd_degrees():
    # (l-1) is even, so odd k never hits the congruence: order 1
    for ell in ODD_PRIMES_97:
        for m in range(1, 40, 2):
            assert k1_sphere_order(ell, m).order == 1


def test_k1_sphere_order_large_k_falls_back_to_modular_path():
    ell = 5
    k = 5000  # above the exact-power threshold
    assert k1_sphere_order(ell, k).order == ell ** (1 + vp_int(k, ell))


# -- Quillen K-groups --------------------------------------------------------


def test_k_finite_field_examples():
    assert k_finite_field(1, 5).order == 4
    assert k_finite_field(3, 2).order == 3
    assert k_finite_field(4, 9).is_trivial
    assert k_finite_field(0, 8).order is None
    with pytest.raises(ValueError):
        k_finite_field(1, 6)
    with pytest.raises(ValueError):
        k_finite_field(-1, 5)


def test_k_finite_field_orders_prime_to_q():
    from math import gcd

    for q in (2, 3, 4, 5, 7, 8, 9, 25, 27, 49):
        for i in range(1, 11):
            report = k_finite_field(2 * i - 1, q)
            assert report.order == q**i - 1
            assert gcd(report.order, q) == 1
            assert k_finite_field(2 * i, q).is_trivial


# -- consistency checks -------------------------------------------------------


def test_imj_consistency_examples():
    assert imj_consistency_check(3, 1)  # 3-part of 24 is 3 = 3^v_3(u^2-1)
    assert imj_consistency_check(5, 2)
    assert imj_consistency_check(7, 1)  # 7 does not divide 24, (l-1) = 6 does not divide 2


def test_imj_consistency_grid():
    for ell in ODD_PRIMES_97:
        for k in range(1, 31):
            assert imj_consistency_check(ell, k), (ell, k)


def test_surjectivity_examples():
    assert surjectivity_check(3, 2, 2)
    assert surjectivity_check(5, 2, 4)
    assert surjectivity_check(3, 7, 1)
    with pytest.raises(ValueError):
        surjectivity_check(3, 3, 1)


def test_norm_identity_examples():
    assert norm_identity_check(3, 2, 1, 5, 20)  # d = 1: both sides u^m - 1
    assert norm_identity_check(3, 2, 2, 3, 20)  # 2^6 - 1 = 63 = (2^3-1)(1+2^3)
    assert norm_identity_check(5, 2, 4, 2, 20)
    with pytest.raises(ValueError):
        norm_identity_check(5, 7, 2, 2, 20)  # 7 is not a generator mod 5


def test_unit_factor_examples_and_sweep():
    assert unit_factor_check(3, 2)
    assert unit_factor_check(5, 3)
    for ell in ODD_PRIMES_97:
        for k in range(2, 51):
            assert unit_factor_check(ell, k)
    with pytest.raises(ValueError):
        unit_factor_check(3, 1)


def test_smallest_generator_recorded():
    for ell in (3, 5, 7, 11):
        result = k1_sphere_order(ell, 2)
        assert result.generator == smallest_topological_generator(ell)
