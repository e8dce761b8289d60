"""Zolotarev's lemma: quadratic residues from permutation parity.

Multiplication by a on Z/p is a permutation; its sign is the Legendre
symbol (a|p).  The library computes the sign by honest cycle walking, so
the agreement is a checked theorem, not a definition.
"""

from jshadow import legendre, zolotarev_sign


def cycles(a: int, p: int) -> list[list[int]]:
    seen = [False] * p
    out = []
    for start in range(1, p):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = a * j % p
        out.append(cycle)
    return out


p = 7
for a in range(1, p):
    cyc = cycles(a, p)
    shape = "".join(f"({' '.join(map(str, c))})" for c in cyc)
    print(
        f"x -> {a}x mod {p}: {shape:24s} sign {zolotarev_sign(a, p):+d}"
        f"  legendre {legendre(a, p):+d}"
    )

# x -> 2x mod 7 factors as (1 2 4)(3 6 5): two 3-cycles, an even
# permutation, so 2 is a square mod 7 (indeed 3^2 = 2).  x -> 3x mod 5
# is the 4-cycle (1 3 4 2), odd, so 3 is not a square mod 5.

mismatches = sum(
    zolotarev_sign(a, p) != legendre(a, p)
    for p in (3, 5, 7, 11, 13, 101, 499)
    for a in range(1, p)
)
print("mismatches over a larger sweep:", mismatches)
