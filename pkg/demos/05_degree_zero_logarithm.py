"""The degree-zero logarithm x -> log(x^(l-1)) / l on Z_l^x.

It lands in Z_l, kills exactly the Teichmuller roots of unity, and hits
a unit at 1+l, which is why it is surjective.  The same machinery
certifies the classic 3-adic curiosity: 1 + 3 + 9 + ... = -1/2.
"""

from jshadow import (
    embed,
    geometric_series_witness,
    rezk_log_pi0,
    smallest_topological_generator,
    teichmuller,
)

ell = 7
print(f"working at l = {ell}, topological generator {smallest_topological_generator(ell)}")

# Teichmuller representatives are (l-1)-st roots of unity, so raising
# them to the (l-1)-st power gives exactly 1 and the log vanishes.
for a in range(1, ell):
    value = rezk_log_pi0(teichmuller(a, ell, 24))
    assert value.is_zero
print(f"all {ell-1} Teichmuller representatives map to 0")

# 1 + l generates the 1-units; its image is an l-adic unit.
image = rezk_log_pi0(embed(1 + ell, ell, 24))
print(f"log-image of {1+ell}: {image} (valuation {image.valuation})")

# A general unit splits as (root of unity) * (1-unit); the log sees only
# the second factor.
x = embed(10, ell, 24)
w = teichmuller(10 % ell, ell, 24)
assert rezk_log_pi0(x) == rezk_log_pi0(x * w.inv())
print("the Teichmuller part of 10 is invisible to the log")

# The geometric series 1 + 3 + 3^2 + ... converges 3-adically: each
# partial sum s_k satisfies 2 s_k + 1 = 3^k, i.e. s_k = -1/2 mod 3^k.
# So a sequence of honest integers converges to a non-integer.
print("3-adic limit of 1 + 3 + 9 + ... is -1/2:", geometric_series_witness(3, 64))
s = [sum(3**i for i in range(k)) for k in range(1, 6)]
print("partial sums:", s, "and 2*s+1:", [2 * x + 1 for x in s])
