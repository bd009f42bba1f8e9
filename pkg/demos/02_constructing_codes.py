"""Constructing constant-composition codes as the largest fiber of pi.

Run with:  python demos/02_constructing_codes.py
"""
from collections import Counter

from cccodes import Composition, ConstructionParams, build_code, field_new, multinomial
from cccodes.verify import verify_code

spacer = "_" * 60

instances = [
    # p, k, q, d0, composition
    (7, 1, 3, 2, (3, 2, 2)),
    (7, 1, 3, 3, (3, 2, 2)),
    (3, 2, 3, 3, (3, 3, 3)),
    (11, 1, 3, 3, (4, 4, 3)),
    (5, 1, 5, 3, (1, 1, 1, 1, 1)),
]

print("Each word of length r is mapped to prod (x - alpha_i)^{c_i} modulo x^d0 and scalars;")
print("the biggest class is the code.\n")
for p, k, q, d0, w in instances:
    comp = Composition(w)
    params = ConstructionParams(field_new(p, k), q, d0, comp)
    code = verify_code(build_code(params))
    print(f"{params.field!r} q={q} d0={d0} composition={w}")
    print(f"  space {multinomial(comp)}, classes {params.r ** (d0 - 1)}, pigeonhole bound {code.pigeonhole_bound}")
    print(f"  code size {code.size}, guaranteed d >= {code.guaranteed_d}, exact d = {code.verified_d}")
    hist = Counter(code.fiber_sizes.values())
    print(f"  fiber size histogram: {dict(sorted(hist.items()))}")
    print(f"  first words: {[''.join(map(str, w_)) for w_ in code.words[:4]]}")
    print(spacer)
