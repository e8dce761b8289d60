"""A tour of exact p-adic arithmetic with tracked precision.

Every value knows how many digits of itself are trustworthy; arithmetic
propagates that knowledge instead of silently inventing digits.
"""

from fractions import Fraction

from jshadow import PadicNumber, embed, padic_log, teichmuller, vp

# Embed rationals into Q_3.  The unit part is stored modulo 3^precision;
# the valuation is exact.
half = embed(Fraction(1, 2), 3, precision=5)
print("1/2 in Q_3:", half)           # 122 + O(3^5): 2 * 122 = 244 = 1 mod 243
print("valuation:", half.valuation)

eighteen = embed(18, 3, precision=5)
print("18 in Q_3:", eighteen)        # 3^2 * 2: valuation 2, unit 2

# Arithmetic agrees with exact rational arithmetic, digit for digit.
x = embed(Fraction(7, 4), 3, 8)
y = embed(Fraction(5, 6), 3, 8)
print("7/4 * 5/6:", x * y)
print("same thing directly:", embed(Fraction(35, 24), 3, 8))

# Adding opposite values cannot prove the result is zero, only that it
# vanishes to the tracked precision; the flagged zero records that.
z = x - x
print("x - x:", z, "(is_zero:", z.is_zero, ")")

# Cancellation spends digits.  1 + 4 = 5 in Q_5: one digit carries into
# the valuation and the unit part is left with one digit less.
s = embed(1, 5, 4) + embed(4, 5, 4)
print("1 + 4 in Q_5:", s, "precision now", s.precision)

# The Teichmuller lift: the unique (p-1)-st root of unity over a residue.
w = teichmuller(2, 5, 6)
print("teichmuller(2) in Z_5:", w)
print("w^4:", w**4)                  # exactly 1 to full precision

# The logarithm turns 1-units into the additive group.
u = embed(1 + 3, 3, 12)
print("log(4) in Z_3:", padic_log(u))
print("log(4^2) - 2 log(4) vanishes:", (padic_log(u**2) - padic_log(u) * 2).is_zero)

# And the valuation of a rational is always available without embedding.
print("v_3(12/25) =", vp(Fraction(12, 25), 3))
