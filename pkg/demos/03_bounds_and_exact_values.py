"""Bounds on A_q(n, d, composition) next to exact values from clique search.

Run with:  python demos/03_bounds_and_exact_values.py
"""
from cccodes import Composition, bound_report, field_new
from cccodes.composition import compositions
from cccodes.verify import exact_max_code

print("Report for q=3, n=9, d=5, composition 3,3,3 using GF(9):\n")
print(bound_report(Composition((3, 3, 3)), 5, field_new(3, 2), 3).to_text())

print("Report for q=3, n=8, d=3, composition 3,3,2:\n")
print(bound_report(Composition((3, 3, 2)), 3).to_text())

print("Small lengths: best lower <= exact <= best upper")
print(f"{'comp':>8} {'d':>2} {'lower':>6} {'exact':>6} {'upper':>6}")
fields = {4: field_new(2, 2), 5: field_new(5)}
for n in (4, 5, 6):
    for comp in compositions(n, 3):
        if min(comp.weights) == 0:
            continue
        for d in (3, 4):
            rep = bound_report(comp, d, fields.get(n))
            exact, _ = exact_max_code(comp, d)
            lo = "-" if rep.best_lower is None else rep.best_lower
            up = "-" if rep.best_upper is None else rep.best_upper
            print(f"{str(comp):>8} {d:>2} {lo:>6} {exact:>6} {up:>6}")
