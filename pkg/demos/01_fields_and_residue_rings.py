"""Finite fields, truncated polynomial rings and the scalar quotient.

Run with:  python demos/01_fields_and_residue_rings.py
"""
from collections import Counter

from cccodes.field import field_new
from cccodes.residue_ring import ResiduePoly, canonical_rep, ring_inv, ring_pow, units

spacer = "_" * 60

print("GF(8) built from the smallest irreducible cubic over GF(2):")
F8 = field_new(2, 3)
print("modulus (constant term first):", F8.modulus)
print("elements in label order:", F8.elements())
x = F8.element([0, 1])
print("x * x^2 =", x * F8.element([0, 0, 1]), "  inverse of x =", x.inv())
print(spacer)

print("\nGF(9) with the default modulus x^2 + 1:")
F9 = field_new(3, 2)
print(F9.elements())
a = F9.element(5)
print(f"({a!r})^8 = {a ** 8!r}  (every nonzero element has order dividing 8)")
print(spacer)

print("\nThe ring GF(3)[x]/(x^3).  Units are the polynomials with nonzero constant term.")
F3 = field_new(3)
f = ResiduePoly.linear(F3.element(1), 3)  # x - 1
print("x - 1 =", f.key, "  (x - 1)^3 =", ring_pow(f, 3).key, "  (Frobenius: x^3 - 1 = -1 mod x^3)")
g = ResiduePoly.from_labels(F3, [2, 1, 1])
print("inverse of", g.key, "is", ring_inv(g).key)
print(spacer)

print("\nDividing out scalars leaves r^(m-1) classes of r-1 units each:")
for (p, k), m in [((3, 1), 2), ((2, 2), 2), ((5, 1), 2), ((3, 1), 3)]:
    F = field_new(p, k)
    classes = Counter(canonical_rep(u) for u in units(F, m))
    print(f"  r={F.r} m={m}: {len(classes)} classes, sizes {sorted(set(classes.values()))}")
