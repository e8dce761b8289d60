"""Image-of-J group orders and their independent cross-checks.

Exact Bernoulli numbers, von Staudt-Clausen denominators, orders of the
odd homotopy of the K(1)-local sphere (Z_l/(u^k - 1) for a topological
generator u), Quillen's K-groups of finite fields, and the consistency
statements tying them together:

* the l-part of den(B_{2k}/4k) equals l**v_l(u^{2k} - 1);
* v_l(p^k - 1) >= v_l(u^k - 1) for every prime p != l, so the K-theory
  of residue fields has enough room to surject onto the local sphere;
* (u^d)^m - 1 = (u^m - 1)(1 + u^m + ... + (u^m)^(d-1)) in Z_l;
* 1 - l^(k-1) is an l-adic unit for k >= 2.

All arithmetic is exact rational or certified-precision p-adic; no
floating point.  The denominator den(B_{2k}/4k) is the classically
correct image-of-J order; its odd part agrees with the odd part of
den(B_{2k}/k), and only odd parts enter the consistency checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._integers import factorint, is_prime, prime_power_base, primes_up_to, vp_int
from .padic import embed, is_topological_generator, smallest_topological_generator

_EXACT_POWER_LIMIT = 4096  # beyond this, u**k is computed modulo l**N instead


_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """The Bernoulli number B_n, exactly (convention B_1 = -1/2).

    Computed by the recurrence sum_{j<=n} C(n+1, j) B_j = 0 with B_0 = 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_bernoulli_cache) <= n:
        m = len(_bernoulli_cache)
        if m > 2 and m % 2:
            _bernoulli_cache.append(Fraction(0))
            continue
        acc = Fraction(0)
        for j, bj in enumerate(_bernoulli_cache):
            if bj:
                acc += math.comb(m + 1, j) * bj
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def von_staudt_clausen_denominator(n: int) -> int:
    """The denominator of B_n for even n >= 2: the product of primes q
    with (q-1) | n.  An independent route that never touches the
    recurrence."""
    if n < 2 or n % 2:
        raise ValueError("defined for even n >= 2")
    product = 1
    for q in primes_up_to(n + 1):
        if n % (q - 1) == 0:
            product *= q
    return product


@dataclass(frozen=True)
class GroupOrderReport:
    """An abelian group order: exact natural number plus factorization.

    ``order`` is None for the infinite cyclic group; otherwise the
    factorization multiplies back to the order (order 1 has an empty
    factorization).
    """

    order: int | None
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def finite(cls, order: int) -> "GroupOrderReport":
        if order < 1:
            raise ValueError("order must be >= 1")
        factors = tuple(factorint(order).items()) if order > 1 else ()
        return cls(order=order, factors=factors)

    @classmethod
    def infinite_cyclic(cls) -> "GroupOrderReport":
        return cls(order=None, factors=())

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def part(self, p: int) -> int:
        """The p-part of the order (1 if p does not divide it)."""
        if self.order is None:
            raise ValueError("infinite group has no p-part")
        return p ** dict(self.factors).get(p, 0)

    def describe(self) -> str:
        if self.order is None:
            return "Z"
        if self.order == 1:
            return "0"
        return f"Z/{self.order}"


def imj_order(k: int) -> GroupOrderReport:
    """The order of the image of J in stable stem 4k-1: den(B_{2k}/4k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return GroupOrderReport.finite((bernoulli(2 * k) / (4 * k)).denominator)


def _vl_power_minus_one(u: int, k: int, ell: int) -> int:
    """v_l(u**|k| - 1) for a unit u, exactly for small |k|, else via a
    certified modulus: the valuation is at most 1 + v_l(k), so computing
    mod l**(v-bound + 8) decides it."""
    k = abs(k)
    if k == 0:
        raise ValueError("k must be nonzero")
    if k <= _EXACT_POWER_LIMIT:
        return vp_int(u**k - 1, ell)
    bound = 1 + vp_int(k, ell) + 8
    residue = pow(u, k, ell**bound)
    if residue == 1:
        raise ArithmeticError("valuation exceeded its certified bound")
    return vp_int(residue - 1, ell)


@dataclass(frozen=True)
class K1SphereOrder:
    """Order of pi_{2k-1} of the K(1)-local sphere at an odd prime l.

    The group is Z_l/(u^k - 1) for a topological generator u; the report
    records which generator was used and the closed-form order
    l**(1 + v_l(k)) when (l-1) | k, else 1, which must agree.
    """

    ell: int
    k: int
    generator: int
    order: int
    closed_form: int

    @property
    def factors(self) -> tuple[tuple[int, int], ...]:
        return tuple(factorint(self.order).items()) if self.order > 1 else ()

    def group_order(self) -> GroupOrderReport:
        return GroupOrderReport.finite(self.order)


def k1_sphere_order(ell: int, k: int, generator: int | None = None) -> K1SphereOrder:
    """|Z_l/(u^k - 1)| = l**v_l(u^k - 1) for a topological generator u.

    ``generator`` defaults to the smallest one; a supplied value is
    validated.  Defined for all nonzero k (the order is even in k).
    """
    if ell == 2 or not is_prime(ell):
        raise ValueError("l must be an odd prime")
    if k == 0:
        raise ValueError("k must be nonzero (pi_{-1} is infinite cyclic)")
    if generator is None:
        generator = smallest_topological_generator(ell)
    elif not is_topological_generator(generator, ell):
        raise ValueError(f"{generator} does not topologically generate Z_{ell}^x")
    v = _vl_power_minus_one(generator, k, ell)
    order = ell**v
    closed = ell ** (1 + vp_int(k, ell)) if abs(k) % (ell - 1) == 0 else 1
    if order != closed:
        raise ArithmeticError(
            f"closed form disagrees with the computed order at (l={ell}, k={k})"
        )
    return K1SphereOrder(ell=ell, k=k, generator=generator, order=order, closed_form=closed)


def k_finite_field(n: int, q: int) -> GroupOrderReport:
    """Quillen's K-groups of F_q: Z in degree 0, cyclic of order q^i - 1
    in degree 2i-1, trivial in positive even degrees."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if prime_power_base(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if n == 0:
        return GroupOrderReport.infinite_cyclic()
    if n % 2 == 0:
        return GroupOrderReport.finite(1)
    i = (n + 1) // 2
    return GroupOrderReport.finite(q**i - 1)


def imj_consistency_check(ell: int, k: int) -> bool:
    """Whether the l-part of the image-of-J order in stem 4k-1 equals the
    order of pi_{4k-1} of the K(1)-local sphere (= pi_{2m-1}, m = 2k)."""
    if ell == 2 or not is_prime(ell):
        raise ValueError("l must be an odd prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    return imj_order(k).part(ell) == k1_sphere_order(ell, 2 * k).order


def surjectivity_check(ell: int, p: int, k: int) -> bool:
    """Whether v_l(p^k - 1) >= v_l(u^k - 1): the l-part of K_{2k-1}(F_p)
    dominates the order of pi_{2k-1} of the K(1)-local sphere."""
    if ell == 2 or not is_prime(ell):
        raise ValueError("l must be an odd prime")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == ell:
        raise ValueError("p must differ from l")
    if k < 1:
        raise ValueError("k must be >= 1")
    u = smallest_topological_generator(ell)
    return _vl_power_minus_one(p, k, ell) >= _vl_power_minus_one(u, k, ell)


def norm_identity_check(ell: int, u: int, d: int, m: int, precision: int) -> bool:
    """Verify (u^d)^m - 1 = (u^m - 1) * sum_{i<d} (u^m)^i in Z_l to the
    given precision, using tracked-precision p-adic arithmetic."""
    if not is_topological_generator(u, ell):
        raise ValueError(f"{u} does not topologically generate Z_{ell}^x")
    if d < 1 or m < 1:
        raise ValueError("d and m must be >= 1")
    x = embed(u, ell, precision)
    xm = x**m
    lhs = (x**d) ** m - 1
    total = embed(1, ell, precision)
    power = embed(1, ell, precision)
    for _ in range(1, d):
        power = power * xm
        total = total + power
    rhs = (xm - 1) * total
    diff = lhs - rhs
    return diff.is_zero and diff.abs_precision >= precision


def unit_factor_check(ell: int, k: int) -> bool:
    """Whether 1 - l**(k-1) is an l-adic unit (k >= 2): the comparison
    factor between the two period identifications changes no image."""
    if ell == 2 or not is_prime(ell):
        raise ValueError("l must be an odd prime")
    if k < 2:
        raise ValueError("k must be >= 2")
    return vp_int(1 - ell ** (k - 1), ell) == 0
