"""Exact p-adic arithmetic with explicit precision tracking.

A nonzero element is stored as ``p**valuation * unit`` where the unit
part is an integer in ``[1, p**precision)`` coprime to ``p``, known
modulo ``p**precision``.  The valuation of a nonzero element is exact;
the absolute precision is ``valuation + precision``.

Precision propagation follows the usual interval model:

* mul / div / inv / pow keep the minimum unit precision of the operands;
* addition works at the minimum absolute precision, so mixing different
  valuations costs digits (the valuation gap is paid for explicitly);
* a sum that cancels below the tracked precision yields the flagged
  zero element ``O(p**A)`` rather than a fabricated nonzero value.

The flagged zero carries only a prime and an absolute precision; reading
its valuation or unit part raises.  Operations that need a genuine unit
(inversion, logarithms, symbols) reject it.

The logarithm and Teichmuller machinery is restricted to odd primes:
``Z_2^x`` is not procyclic and the 2-adic log needs valuation >= 2, so
none of the identities verified here apply at 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from ._integers import is_prime, multiplicative_order_divides_check, vp_int

DEFAULT_PRECISION = 64
MAX_PRECISION = 4096

Rational = Union[int, Fraction]


class PadicError(ValueError):
    """Base class for p-adic domain errors."""


class PrecisionError(PadicError):
    """A result would be known to fewer than one digit."""


class ZeroOperandError(PadicError):
    """An operation received (or would have to invert) a zero."""


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise PadicError(f"{p} is not prime")


def _check_precision(n: int) -> None:
    if not 1 <= n <= MAX_PRECISION:
        raise PrecisionError(f"precision must be in [1, {MAX_PRECISION}], got {n}")


def vp(x: Rational, p: int) -> int:
    """The exact p-adic valuation of a nonzero rational.

    Additive: vp(x*y) = vp(x) + vp(y).
    """
    _check_prime(p)
    x = Fraction(x)
    if x == 0:
        raise ZeroOperandError("valuation of 0 is undefined")
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def padic_norm(x: Rational, p: int) -> Fraction:
    """The p-adic norm p**(-vp(x)), exactly, as a rational."""
    v = vp(x, p)
    return Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v))


class PadicNumber:
    """An element of Q_p known to finite precision.

    Instances are immutable (and hashable).  Use :func:`embed`,
    :func:`teichmuller`, or the classmethods :meth:`from_unit` /
    :meth:`zero` to construct values.
    """

    __slots__ = ("prime", "_valuation", "_unit_digits", "precision")

    def __init__(self) -> None:
        raise TypeError("use PadicNumber.from_unit, PadicNumber.zero, or embed()")

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PadicNumber is immutable")

    @classmethod
    def _make(cls, prime: int, valuation: int | None, unit_digits: int | None, precision: int) -> "PadicNumber":
        self = object.__new__(cls)
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "_valuation", valuation)
        object.__setattr__(self, "_unit_digits", unit_digits)
        object.__setattr__(self, "precision", precision)
        return self

    @classmethod
    def from_unit(cls, prime: int, valuation: int, unit_digits: int, precision: int) -> "PadicNumber":
        _check_prime(prime)
        _check_precision(precision)
        unit_digits %= prime**precision
        if unit_digits % prime == 0:
            raise PadicError("unit part must be coprime to the prime")
        return cls._make(prime, valuation, unit_digits, precision)

    @classmethod
    def zero(cls, prime: int, abs_precision: int) -> "PadicNumber":
        """The flagged zero: a value known only to satisfy x = O(p**abs_precision)."""
        _check_prime(prime)
        if abs_precision < 1:
            raise PrecisionError("zero must be known modulo at least one digit")
        return cls._make(prime, None, None, abs_precision)

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self._valuation is None

    @property
    def valuation(self) -> int:
        if self._valuation is None:
            raise ZeroOperandError("the zero element has no valuation")
        return self._valuation

    @property
    def unit_digits(self) -> int:
        if self._unit_digits is None:
            raise ZeroOperandError("the zero element has no unit part")
        return self._unit_digits

    @property
    def abs_precision(self) -> int:
        """The element is known modulo prime**abs_precision."""
        if self.is_zero:
            return self.precision
        return self._valuation + self.precision

    def lifted_int(self) -> int:
        """The canonical integer representative modulo p**abs_precision (valuation >= 0 only)."""
        if self.is_zero:
            return 0
        if self._valuation < 0:
            raise PadicError("no integer representative: negative valuation")
        return self._unit_digits * self.prime**self._valuation

    # -- equality is structural (canonical form) ----------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PadicNumber):
            return NotImplemented
        if self.prime != other.prime:
            return False
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero and self.precision == other.precision
        return (
            self._valuation == other._valuation
            and self._unit_digits == other._unit_digits
            and self.precision == other.precision
        )

    def __hash__(self) -> int:
        return hash((self.prime, self._valuation, self._unit_digits, self.precision))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicNumber.zero({self.prime}, {self.precision})"
        return (
            f"PadicNumber.from_unit({self.prime}, {self._valuation}, "
            f"{self._unit_digits}, {self.precision})"
        )

    def __str__(self) -> str:
        p = self.prime
        if self.is_zero:
            return f"O({p}^{self.precision})"
        head = f"{p}^{self._valuation} * " if self._valuation else ""
        return f"{head}{self._unit_digits} + O({p}^{self.abs_precision})"

    # -- precision management -----------------------------------------

    def reduce_precision(self, precision: int) -> "PadicNumber":
        """Forget digits down to the given unit precision."""
        _check_precision(precision)
        if self.is_zero:
            return PadicNumber.zero(self.prime, min(self.precision, precision))
        if precision >= self.precision:
            return self
        return PadicNumber.from_unit(
            self.prime, self._valuation, self._unit_digits % self.prime**precision, precision
        )

    def _cap_abs(self, abs_precision: int) -> "PadicNumber":
        """Forget digits above absolute precision abs_precision."""
        if self.is_zero:
            return PadicNumber.zero(self.prime, min(self.precision, abs_precision))
        if abs_precision >= self.abs_precision:
            return self
        n = abs_precision - self._valuation
        if n < 1:
            # Every tracked digit lies above the cap: only x = O(p^abs) remains.
            return PadicNumber.zero(self.prime, abs_precision)
        return self.reduce_precision(n)

    def _coerce(self, other: "PadicNumber | Rational") -> "PadicNumber":
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise PadicError("mixed primes")
            return other
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroOperandError("cannot coerce exact 0; use PadicNumber.zero")
            # An exact rational is known to unlimited precision; give it
            # enough digits that it never limits the result.
            v = vp(other, self.prime)
            return embed(other, self.prime, max(1, self.abs_precision - v))
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "PadicNumber":
        if self.is_zero:
            return self
        m = self.prime**self.precision
        return PadicNumber.from_unit(self.prime, self._valuation, m - self._unit_digits, self.precision)

    def __add__(self, other: "PadicNumber | Rational") -> "PadicNumber":
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        if self.is_zero and other.is_zero:
            return PadicNumber.zero(p, min(self.precision, other.precision))
        if self.is_zero:
            return other._cap_abs(self.precision)
        if other.is_zero:
            return self._cap_abs(other.precision)
        a = min(self.abs_precision, other.abs_precision)
        v = min(self._valuation, other._valuation)
        width = a - v  # >= 1 because each unit precision is >= 1
        m = p**width
        s = (
            self._unit_digits * p ** (self._valuation - v)
            + other._unit_digits * p ** (other._valuation - v)
        ) % m
        if s == 0:
            return PadicNumber.zero(p, a)
        w = vp_int(s, p)
        return PadicNumber.from_unit(p, v + w, s // p**w, width - w)

    __radd__ = __add__

    def __sub__(self, other: "PadicNumber | Rational") -> "PadicNumber":
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: Rational) -> "PadicNumber":
        return (-self).__add__(other)

    def __mul__(self, other: "PadicNumber | Rational") -> "PadicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.prime
        # O(p^A) * (p^v * unit) = O(p^(A+v)); O(p^A) * O(p^B) = O(p^(A+B)).
        if self.is_zero and other.is_zero:
            return PadicNumber.zero(p, self.precision + other.precision)
        if self.is_zero:
            return PadicNumber.zero(p, self.precision + other._valuation)
        if other.is_zero:
            return PadicNumber.zero(p, other.precision + self._valuation)
        n = min(self.precision, other.precision)
        digits = self._unit_digits * other._unit_digits % p**n
        return PadicNumber.from_unit(p, self._valuation + other._valuation, digits, n)

    __rmul__ = __mul__

    def inv(self) -> "PadicNumber":
        if self.is_zero:
            raise ZeroOperandError("cannot invert the zero element")
        digits = pow(self._unit_digits, -1, self.prime**self.precision)
        return PadicNumber.from_unit(self.prime, -self._valuation, digits, self.precision)

    def __truediv__(self, other: "PadicNumber | Rational") -> "PadicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroOperandError("division by the zero element")
        return self.__mul__(other.inv())

    def __rtruediv__(self, other: Rational) -> "PadicNumber":
        return self.inv().__mul__(other)

    def __pow__(self, exponent: int) -> "PadicNumber":
        if not isinstance(exponent, int):
            return NotImplemented
        if self.is_zero:
            if exponent <= 0:
                raise ZeroOperandError("zero element cannot be raised to a nonpositive power")
            return PadicNumber.zero(self.prime, exponent * self.precision)
        if exponent == 0:
            return PadicNumber.from_unit(self.prime, 0, 1, self.precision)
        base = self if exponent > 0 else self.inv()
        e = abs(exponent)
        digits = pow(base._unit_digits, e, base.prime**base.precision)
        return PadicNumber.from_unit(base.prime, base._valuation * e, digits, base.precision)


def embed(x: Rational, prime: int, precision: int = DEFAULT_PRECISION) -> "PadicNumber":
    """Embed a nonzero rational into Q_p, the unit part known mod p**precision.

    The denominator is inverted modulo p**precision by extended gcd.
    """
    _check_prime(prime)
    _check_precision(precision)
    x = Fraction(x)
    if x == 0:
        raise ZeroOperandError("cannot embed 0; use PadicNumber.zero")
    vn = vp_int(x.numerator, prime)
    vd = vp_int(x.denominator, prime)
    m = prime**precision
    num_unit = abs(x.numerator) // prime**vn
    den_unit = x.denominator // prime**vd
    digits = num_unit * pow(den_unit, -1, m) % m
    if x < 0:
        digits = (m - digits) % m
    return PadicNumber.from_unit(prime, vn - vd, digits, precision)


def teichmuller(a: int, prime: int, precision: int = DEFAULT_PRECISION) -> "PadicNumber":
    """The Teichmuller representative: the (p-1)-st root of unity congruent to a mod p.

    Computed as the limit of a**(p**n), which stabilizes within
    `precision` iterations.  Requires an odd prime and a nonzero residue.
    """
    _check_prime(prime)
    if prime == 2:
        raise PadicError("Teichmuller lifts are restricted to odd primes here")
    _check_precision(precision)
    if a % prime == 0:
        raise ZeroOperandError("residue must be nonzero mod p")
    m = prime**precision
    x = a % m
    while True:
        y = pow(x, prime, m)
        if y == x:
            break
        x = y
    return PadicNumber.from_unit(prime, 0, x, precision)


def _ilog(n: int, p: int) -> int:
    """floor(log_p(n)) for n >= 1."""
    e = 0
    while p**(e + 1) <= n:
        e += 1
    return e


def padic_log(u: PadicNumber) -> "PadicNumber":
    """The p-adic logarithm of a 1-unit, for odd p.

    Sums log(1+t) = t - t^2/2 + t^3/3 - ... until the term valuation
    passes the tracked absolute precision.  Termination: with
    m = vp(t) >= 1 and p odd, vp(t^k / k) >= k*m - log_p(k), which is
    strictly increasing in k, so only finitely many terms contribute.
    """
    p = u.prime
    if p == 2:
        raise PadicError("the logarithm is restricted to odd primes here")
    if u.is_zero:
        raise ZeroOperandError("log of the zero element")
    if u.valuation != 0 or u.unit_digits % p != 1:
        raise PadicError("log requires u = 1 mod p")
    target = u.abs_precision  # = unit precision, since valuation is 0
    t = u.unit_digits - 1
    if t % p**target == 0:
        return PadicNumber.zero(p, target)
    m = vp_int(t, p)
    # Last term index: first k with k*m - floor(log_p k) >= target.
    kmax = 1
    while kmax * m - _ilog(kmax, p) < target:
        kmax += 1
    guard = _ilog(kmax, p) + 1
    mod = p ** (target + guard)
    total = 0
    power = 1
    for k in range(1, kmax + 1):
        power = power * t % mod
        e = vp_int(k, p) if k % p == 0 else 0
        reduced = power // p**e if e else power
        term = reduced * pow(k // p**e, -1, mod) % mod
        total = (total - term if k % 2 == 0 else total + term) % mod
    total %= p**target
    if total == 0:
        return PadicNumber.zero(p, target)
    w = vp_int(total, p)
    return PadicNumber.from_unit(p, w, total // p**w, target - w)


def rezk_log_pi0(x: PadicNumber) -> "PadicNumber":
    """The degree-zero logarithm Z_l^x -> Z_l:  x -> log(x**(l-1)) / l.

    Defined for units at odd primes; the result always has valuation >= 0
    and vanishes exactly on the Teichmuller roots of unity.
    """
    ell = x.prime
    if ell == 2:
        raise PadicError("restricted to odd primes")
    if x.is_zero:
        raise ZeroOperandError("argument must be a unit")
    if x.valuation != 0:
        raise PadicError("argument must be a unit of Z_l")
    y = x ** (ell - 1)
    lg = padic_log(y)
    if lg.is_zero:
        if lg.precision < 2:
            raise PrecisionError("not enough digits to divide by the prime")
        return PadicNumber.zero(ell, lg.precision - 1)
    return PadicNumber.from_unit(ell, lg.valuation - 1, lg.unit_digits, lg.precision)


def is_topological_generator(u: int, ell: int) -> bool:
    """Whether the integer u topologically generates Z_l^x (l odd).

    Holds iff u generates the multiplicative group mod l and
    v_l(u**(l-1) - 1) = 1; consequently it depends only on u mod l**2.
    """
    _check_prime(ell)
    if ell == 2:
        raise PadicError("Z_2^x is not procyclic; l must be odd")
    if u % ell == 0:
        raise ZeroOperandError("u must be prime to l")
    if not multiplicative_order_divides_check(u, ell):
        return False
    return pow(u, ell - 1, ell * ell) != 1


def smallest_topological_generator(ell: int) -> int:
    """The least integer u >= 2 that topologically generates Z_l^x."""
    u = 2
    while not is_topological_generator(u, ell):
        u += 1
    return u


def geometric_series_witness(ell: int = 3, depth: int = 64) -> bool:
    """Certify that 1 + l + l^2 + ... converges l-adically to -1/(l-1).

    Checks, for every k <= depth, that the partial sum s_k of the first k
    powers satisfies (l-1)*s_k + 1 = l**k, i.e. s_k = -1/(l-1) mod l**k.
    For l = 3 this is the statement 2*s_k + 1 = 3**k, exhibiting a
    sequence of integers converging 3-adically to the non-integer -1/2.
    """
    _check_prime(ell)
    if depth < 1:
        raise ValueError("depth must be >= 1")
    s = 0
    power = 1
    for k in range(1, depth + 1):
        s += power
        power *= ell
        if (ell - 1) * s + 1 != power:
            return False
    return True
