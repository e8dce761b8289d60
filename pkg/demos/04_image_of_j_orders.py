"""Image-of-J group orders: Bernoulli denominators meet the local sphere.

The cyclic image of J in stable stem 4k-1 has order den(B_{2k}/4k).  At
an odd prime l, pi_{2m-1} of the K(1)-local sphere is Z_l/(u^m - 1) for
a topological generator u of Z_l^x.  Taking m = 2k, the l-parts agree:
two completely different computations, one answer.
"""

from jshadow import (
    bernoulli,
    imj_consistency_check,
    imj_order,
    k1_sphere_order,
    k_finite_field,
    von_staudt_clausen_denominator,
)

print("Bernoulli numbers and their denominators:")
for k in (1, 2, 3, 6):
    b = bernoulli(2 * k)
    print(
        f"  B_{2*k} = {b}   den(B_{2*k}) = {b.denominator}"
        f" = von Staudt-Clausen {von_staudt_clausen_denominator(2*k)}"
    )

print("\nimage-of-J orders (den(B_2k/4k)):")
for k in (1, 2, 3, 4, 5):
    report = imj_order(k)
    factors = " * ".join(f"{p}^{e}" for p, e in report.factors)
    print(f"  stem {4*k-1}: order {report.order} = {factors}")

print("\nK(1)-local sphere orders at l = 3 (generator u = 2):")
for k in range(1, 7):
    result = k1_sphere_order(3, k)
    print(f"  pi_{2*k-1}: Z_3/(u^{k} - 1) has order {result.order}")

print("\nconsistency of the two routes, small grid:")
for ell in (3, 5, 7, 13):
    row = [imj_consistency_check(ell, k) for k in range(1, 13)]
    print(f"  l = {ell:2d}: {'ok ' * all(row)}({sum(row)}/12)")

print("\nQuillen's K-groups of finite fields supply the comparison objects:")
for q in (2, 5, 9):
    orders = [k_finite_field(2 * i - 1, q).order for i in range(1, 5)]
    print(f"  K_odd(F_{q}): orders {orders} (always q^i - 1)")
