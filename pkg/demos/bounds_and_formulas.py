"""Closed-form intersection bounds, h-vectors, and resolution shapes.

Walks the formula layer: the sharp count B(t, r) for curves cut out by
linear-entry matrices, its uniform-degree generalization B(d; t, r), and the
h-vector / free-resolution data the counts are derived from.
"""

from acmcurves import (bound_linear, bound_uniform, deg_acm, expected_betti,
                       h_vector_gorenstein, hilbert_from_resolution)

print("Sharp intersection counts B(t, r) for linear-entry determinantal curves")
print("rows: t = 2..8, columns: r = 1..t-1\n")
for t in range(2, 9):
    row = [f"{bound_linear(t, r):4d}" for r in range(1, t)]
    print(f"  t={t}: " + " ".join(row))

print("\nHeadline values: B(4,2) =", bound_linear(4, 2), " B(5,2) =", bound_linear(5, 2))

print("\nSpecialization ladders (small curves against a big one):")
print("  line:          B(t, t-1) =", [bound_linear(t, t - 1) for t in range(2, 9)])
print("  twisted cubic: B(t, t-2) =", [bound_linear(t, t - 2) for t in range(2, 9)])
print("  sextic g=3:    B(t, t-3) =", [bound_linear(t, t - 3) for t in range(3, 9)])
print("  deg-10 g=11:   B(t, t-4) =", [bound_linear(t, t - 4) for t in range(4, 9)])

print("\nUniform degree d: a CI(d,d) against the curve of a 2x3 degree-d matrix")
for d in range(1, 7):
    print(f"  d={d}: B(d;2,1) = {bound_uniform(d, 2, 1):5d}  (= 2d^3 = {2 * d**3})")

print("\nCurve degrees deg = d^2 * C(t+1, 2):")
for t in (2, 3, 4, 5):
    print(f"  t={t}: d=1 -> {deg_acm(t, 1):3d},  d=2 -> {deg_acm(t, 2):3d},  d=3 -> {deg_acm(t, 3):3d}")

print("\nThe h-vector of the intersection scheme rises 1, 3, 6, ... to a flat")
print("middle and mirrors back down; its sum is the intersection count:")
for (t, r) in [(4, 2), (5, 2), (6, 3), (7, 1)]:
    h = h_vector_gorenstein(t, r)
    print(f"  (t,r)=({t},{r}): {h}  sum = {sum(h)}")

print("\nExpected minimal free resolution (twist: rank per homological step):")
for (t, r, d) in [(4, 2, 1), (2, 1, 3)]:
    shape = expected_betti(t, r, d)
    print(f"  (t,r,d)=({t},{r},{d}):")
    for i in (1, 2, 3):
        print(f"    step {i}: {shape.step(i)}")
    h, deg = hilbert_from_resolution(shape)
    print(f"    h-vector from the resolution: {h}, degree {deg}")
