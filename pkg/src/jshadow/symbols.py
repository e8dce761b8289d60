"""Quadratic symbols at every place of Q.

Legendre/Jacobi symbols, Zolotarev permutation signs, Hilbert symbols
(closed form and solvability oracle), and tame symbols.  Sign values are
plain ints in {+1, -1}.

Conventions:

* ``legendre`` runs the Jacobi reciprocity ladder; Euler's criterion is
  kept out of the library so tests can use it as an independent oracle.
* ``zolotarev_sign`` always walks the cycle decomposition and never
  consults Legendre symbols, so its agreement with ``legendre`` is a
  theorem being tested, not a tautology.
* ``hilbert_oracle`` decides solvability of z^2 = a x^2 + b y^2 directly
  by searching for a primitive solution modulo p^M, M = 2*v_p(4ab) + 3.
  Soundness of that modulus: a primitive approximate solution has a unit
  coordinate, so some partial derivative of f = z^2 - a x^2 - b y^2 has
  valuation m <= t := v_p(4ab); then v_p(f) >= 2t + 3 > 2m lets Newton's
  iteration lift the solution to Z_p.  Conversely a Z_p-solution scales
  to a primitive one and reduces mod p^M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ._integers import factorint, is_prime, vp_int

Rational = Union[int, Fraction]
Sign = int  # always +1 or -1


class SymbolError(ValueError):
    """Invalid input to a symbol computation."""


@dataclass(frozen=True)
class Place:
    """A place of Q: a finite prime or the archimedean place."""

    prime: int | None  # None encodes the infinite place

    def __post_init__(self) -> None:
        if self.prime is not None and not is_prime(self.prime):
            raise SymbolError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @classmethod
    def infinity(cls) -> "Place":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "Place":
        if text in ("inf", "oo", "infinity"):
            return cls.infinity()
        try:
            p = int(text)
        except ValueError:
            raise SymbolError(f"not a place: {text!r}") from None
        return cls.finite(p)

    @property
    def is_finite(self) -> bool:
        return self.prime is not None

    def sort_key(self) -> tuple[int, int]:
        return (1, 0) if self.prime is None else (0, self.prime)

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITY = Place.infinity()


def jacobi(a: int, n: int) -> int:
    """The Jacobi symbol (a|n) for odd n >= 1, by the reciprocity ladder."""
    if n <= 0 or n % 2 == 0:
        raise SymbolError("Jacobi symbol needs odd n >= 1")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise SymbolError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """The Legendre symbol (a|p) in {-1, 0, +1} for odd prime p."""
    _check_odd_prime(p)
    return jacobi(a, p)


def zolotarev_sign(a: int, p: int) -> Sign:
    """The sign of the permutation x -> a*x of Z/p, by cycle decomposition."""
    _check_odd_prime(p)
    a %= p
    if a == 0:
        raise SymbolError("a must be prime to p")
    visited = bytearray(p)
    sign = 1
    for start in range(1, p):  # 0 is a fixed point
        if visited[start]:
            continue
        length = 0
        j = start
        while not visited[j]:
            visited[j] = 1
            j = a * j % p
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _cleared_int(x: Rational, what: str) -> int:
    """Replace x by the integer x * den(x)^2 (same square class)."""
    x = Fraction(x)
    if x == 0:
        raise SymbolError(f"{what} must be nonzero")
    return x.numerator * x.denominator


def _split_unit(n: int, p: int) -> tuple[int, int]:
    """n = p**alpha * u with u prime to p; returns (alpha, u)."""
    alpha = vp_int(n, p)
    return alpha, n // p**alpha


def hilbert_symbol(a: Rational, b: Rational, place: Place) -> Sign:
    """The Hilbert symbol (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a
    nontrivial solution over the completion at v.

    Closed forms: at the infinite place, -1 iff a < 0 and b < 0.  At an
    odd prime p, with a = p^alpha u and b = p^beta w,
    (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha.  At 2, with odd
    unit parts u, w, (-1)^(eps(u)eps(w) + alpha omega(w) + beta omega(u))
    where eps(x) = (x-1)/2 and omega(x) = (x^2-1)/8 mod 2.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise SymbolError("Hilbert symbol inputs must be nonzero")
    if not place.is_finite:
        return -1 if a < 0 and b < 0 else 1
    A = _cleared_int(a, "a")
    B = _cleared_int(b, "b")
    return _hilbert_symbol_int(A, B, place.prime)


def _hilbert_symbol_int(A: int, B: int, p: int) -> Sign:
    alpha, u = _split_unit(A, p)
    beta, w = _split_unit(B, p)
    if p == 2:
        eps_u = (u - 1) // 2 % 2
        eps_w = (w - 1) // 2 % 2
        omega_u = (u * u - 1) // 8 % 2
        omega_w = (w * w - 1) // 8 % 2
        e = eps_u * eps_w + alpha * omega_w + beta * omega_u
        return -1 if e % 2 else 1
    sign = -1 if alpha * beta * ((p - 1) // 2) % 2 else 1
    if beta % 2:
        sign *= jacobi(u, p)
    if alpha % 2:
        sign *= jacobi(w, p)
    return sign


@lru_cache(maxsize=64)
def _sqrt_table(p: int) -> dict[int, tuple[int, ...]]:
    """s -> all z in [0, p) with z^2 = s mod p."""
    table: dict[int, tuple[int, ...]] = {}
    for z in range(p):
        s = z * z % p
        table[s] = table.get(s, ()) + (z,)
    return table


def _search_primitive_solution(A: int, B: int, p: int, levels: int) -> bool:
    """Exhaustive search for a primitive solution of z^2 = A x^2 + B y^2
    modulo p**levels, walking the tree of solutions mod p, p^2, ...

    A node at level j is a triple mod p^j satisfying the congruence; its
    children at level j+1 are found by solving the linearized congruence
    c + fx*da + fy*db + fz*dc = 0 mod p in the next digits (da, db, dc).
    Primitivity = the level-1 projection is not (0,0,0).  The walk is
    depth-first with lazy child generators, so one full-depth solution is
    found quickly when the conic is solvable, and the tree (which Hensel
    lifting keeps shallow) is exhausted when it is not.
    """
    sqrt_table = _sqrt_table(p)
    A %= p**levels
    B %= p**levels

    def children(x: int, y: int, z: int, j: int):
        pj = p**j
        c = (z * z - A * x * x - B * y * y) // pj % p
        fx = -2 * A * x % p
        fy = -2 * B * y % p
        fz = 2 * z % p
        if fx == 0 and fy == 0 and fz == 0:
            if c:
                return
            for da in range(p):
                for db in range(p):
                    for dc in range(p):
                        yield x + da * pj, y + db * pj, z + dc * pj
        elif fz:
            inv = pow(fz, -1, p)
            for da in range(p):
                for db in range(p):
                    dc = (-c - da * fx - db * fy) * inv % p
                    yield x + da * pj, y + db * pj, z + dc * pj
        elif fy:
            inv = pow(fy, -1, p)
            for da in range(p):
                for dc in range(p):
                    db = (-c - da * fx - dc * fz) * inv % p
                    yield x + da * pj, y + db * pj, z + dc * pj
        else:
            inv = pow(fx, -1, p)
            for db in range(p):
                for dc in range(p):
                    da = (-c - db * fy - dc * fz) * inv % p
                    yield x + da * pj, y + db * pj, z + dc * pj

    def deep_lift(x: int, y: int, z: int) -> bool:
        if levels == 1:
            return True
        stack = [children(x, y, z, 1)]  # stack[j-1] yields nodes at level j+1
        while stack:
            node = next(stack[-1], None)
            if node is None:
                stack.pop()
            elif len(stack) + 1 == levels:
                return True
            else:
                stack.append(children(*node, len(stack) + 1))
        return False

    for x in range(p):
        ax2 = A * x * x
        for y in range(p):
            s = (ax2 + B * y * y) % p
            for z in sqrt_table.get(s, ()):
                if (x or y or z) and deep_lift(x, y, z):
                    return True
    return False


def hilbert_oracle(
    a: Rational, b: Rational, place: Place, modulus_exponent: int | None = None
) -> Sign:
    """Decide (a,b)_v by direct solvability of z^2 = a x^2 + b y^2.

    At the infinite place this is sign inspection.  At a finite prime the
    equation is cleared to integer coefficients and searched modulo
    p**M with M = 2*v_p(4ab) + 3 (see module docstring for why a
    primitive solution at that modulus certifies a Z_p point).  A larger
    modulus exponent may be supplied; a smaller one is rejected.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise SymbolError("oracle inputs must be nonzero")
    if not place.is_finite:
        return -1 if a < 0 and b < 0 else 1
    p = place.prime
    A = _cleared_int(a, "a")
    B = _cleared_int(b, "b")
    required = 2 * vp_int(4 * A * B, p) + 3
    if modulus_exponent is None:
        modulus_exponent = required
    elif modulus_exponent < required:
        raise SymbolError(
            f"modulus exponent {modulus_exponent} is below the lifting bound {required}"
        )
    return 1 if _search_primitive_solution(A, B, p, modulus_exponent) else -1


def tame_symbol(a: Rational, b: Rational, p: int) -> int:
    """The tame symbol at p: (-1)^(v(a)v(b)) a^v(b) / b^v(a) reduced mod p.

    Returns the least positive residue, a unit of Z/p.
    """
    if not is_prime(p):
        raise SymbolError(f"{p} is not prime")
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise SymbolError("tame symbol inputs must be nonzero")
    alpha = vp_int(a.numerator, p) - vp_int(a.denominator, p)
    beta = vp_int(b.numerator, p) - vp_int(b.denominator, p)
    r = Fraction(-1 if alpha * beta % 2 else 1) * a**beta / b**alpha
    return r.numerator * pow(r.denominator, -1, p) % p


def _odd_prime_support(a: Fraction, b: Fraction) -> list[int]:
    primes: set[int] = set()
    for n in (a.numerator, a.denominator, b.numerator, b.denominator):
        primes.update(factorint(abs(n)))
    primes.discard(2)
    return sorted(primes)


@dataclass(frozen=True)
class ReciprocityResult:
    """Per-place Hilbert symbols of a pair, with their product.

    ``local_symbols`` lists every place in the support set (the infinite
    place, 2, and the odd primes dividing numerator or denominator of
    either argument).  Every omitted place v = p has alpha = beta = 0 in
    the odd-p closed form, hence symbol +1, so the product over the
    support set is the full product over all places.
    """

    a: Fraction
    b: Fraction
    local_symbols: tuple[tuple[Place, Sign], ...]
    product: Sign

    @property
    def passes(self) -> bool:
        return self.product == 1

    @property
    def contributing_places(self) -> tuple[Place, ...]:
        return tuple(v for v, s in self.local_symbols if s == -1)


def hilbert_reciprocity_check(a: Rational, b: Rational) -> ReciprocityResult:
    """Evaluate (a,b)_v on the finite support set and multiply."""
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise SymbolError("inputs must be nonzero")
    places = [Place.finite(2)]
    places += [Place.finite(p) for p in _odd_prime_support(a, b)]
    places.append(INFINITY)
    symbols = tuple((v, hilbert_symbol(a, b, v)) for v in places)
    product = 1
    for _, s in symbols:
        product *= s
    return ReciprocityResult(a=a, b=b, local_symbols=symbols, product=product)
