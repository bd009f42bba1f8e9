"""Why q = 3 in characteristic 2 does not give distance 3.

Run with:  python demos/04_characteristic_two.py
"""
from cccodes import Composition, ConstructionParams, build_code, field_new, pi_image
from cccodes.composition import hamming
from cccodes.residue_ring import ResiduePoly, ring_pow
from cccodes.verify import exact_min_distance

F = field_new(2, 3)
print("In characteristic 2, (x - a)^2 = x^2 + a^2, which is the scalar a^2 modulo x^2:")
for i, a in enumerate(F.elements()[1:4], 1):
    sq = ring_pow(ResiduePoly.linear(a, 2), 2)
    print(f"  alpha_{i} = {a!r}: (x - alpha_{i})^2 mod x^2 has labels {sq.key}, alpha_{i}^2 = {(a * a)!r}")

params = ConstructionParams(F, 3, 2, Composition((3, 3, 2)))
u, v = (0, 0, 0, 1, 2, 1, 1, 2), (0, 0, 2, 1, 0, 1, 1, 2)
print("\nSwapping a 0 and a 2 multiplies the product by (x-a)^2/(x-b)^2, a scalar, so")
print(f"  pi({u}) = {pi_image(u, params).key}")
print(f"  pi({v}) = {pi_image(v, params).key}")
print(f"  while the two words are at distance {hamming(u, v)}.")

code = build_code(params)
print(f"\nLargest fiber: {code.size} words, exact minimum distance {exact_min_distance(code.words)}.")
print(f"Reported guarantee: {code.guaranteed_d}")

two_symbol = ConstructionParams(F, 3, 2, Composition((4, 4, 0)))
code = build_code(two_symbol)
print(f"\nWithout symbol 2 ({two_symbol.comp}): {code.size} words, "
      f"guarantee {code.guaranteed_d}, exact {exact_min_distance(code.words)}")
