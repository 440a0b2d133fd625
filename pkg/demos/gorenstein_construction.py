"""Building a pair of determinantal curves with a Gorenstein intersection.

Shows the embedded-transpose layout: the small matrix reappears transposed
in the last columns of the big one, over a forced zero block. The demo then
derives the union matrix and the explicit generator set of the intersection
ideal, and certifies the whole construction end to end.
"""

import random

from acmcurves import (build_linear_pair, gorenstein_generators, union_matrix,
                       verify_construction)

t, r = 4, 2
pair = build_linear_pair(t, r, random.Random(2024))
print(f"(t, r) = ({t}, {r}):  M_small is {pair.m_small.rows}x{pair.m_small.cols}, "
      f"M_big is {pair.m_big.rows}x{pair.m_big.cols}")
print(f"embedded transpose block at rows 0..{t-r}, columns {r+1}..{t}; "
      f"zero block below it\n")

print("Layout check, entry by entry:")
for i in range(t - r + 1):
    for k in range(t - r):
        same = pair.m_big.entry(i, r + 1 + k) == pair.m_small.entry(k, i)
        assert same
print("  M_big[i][r+1+k] == M_small[k][i] for every i, k: True")
zeros = all(pair.m_big.entry(i, r + 1 + k).is_zero
            for i in range(t - r + 1, t) for k in range(t - r))
print(f"  forced zero block: {zeros}\n")

u = union_matrix(pair)
print(f"Union matrix: {u.rows}x{u.cols}, degree matrix {[list(row) for row in u.degree_matrix]}")
print("(its maximal minors cut out the union of the two curves)\n")

gens = gorenstein_generators(pair)
degs = sorted(g.degree for g in gens.generators)
print(f"Intersection ideal generators: {len(gens.generators)} forms, degrees {degs}")
print("(= all maximal minors of M_small, plus the minors of M_big that delete")
print(" one embedded column)\n")

report = verify_construction(t, r, 1, seed=2024)
print("Full verification report:")
print(f"  intersection length: {report.observed_degree} (expected {report.expected_degree})")
print(f"  h-vector:            {report.observed_h_vector}")
print(f"  generator degrees:   {report.generator_degrees_observed}")
print(f"  Pfaffian span check: {report.pfaffian_span_equal}")
print(f"  verdict:             {'PASS' if report.passed else 'FAIL'}")
