"""Peaks of permutations and the identities they force.

Run:  python demos/04_permutations_and_peaks.py
"""

from fractions import Fraction

from qsymx import (
    all_permutations,
    bivariate_catalan,
    descent_composition,
    descent_map,
    eval_perm,
    multiply_ssym,
    peak_sets,
    ssym_basis,
)
from qsymx.permutations import interior_peaks

sigma = (3, 1, 2, 5, 4, 6)
interior, augmented = peak_sets(sigma)
print("sigma = 312546: descent composition %r, interior peaks %s, augmented %s"
      % (descent_composition(sigma), sorted(interior), sorted(augmented)))

print()
print("The shuffle product in the permutation algebra:")
product = multiply_ssym(ssym_basis((1, 2)), ssym_basis((3, 1, 2)))
print("   F_12 * F_312 has %d terms" % len(product.coeffs))
print("   its image under the descent map:", descent_map(product))

print()
print("Summing the signed peak weights over all of S_n collapses to a")
print("power of 4 (the odd canonical character applied to (F_1)^n):")
for n in range(8):
    total = Fraction(0)
    for tau in all_permutations(n):
        p = interior_peaks(tau)
        term = bivariate_catalan(p, n // 2 - p)
        total += -term if p % 2 else term
    print("   n=%d: sum = %-6s = 4^%d" % (n, total, n // 2))
    assert total == 4 ** (n // 2)

print()
print("Character values computed straight from the permutation:")
for tau in [(1, 2), (2, 1), (1, 3, 2), (2, 1, 4, 3)]:
    print("   sigma=%-12r zeta-=%-8s zeta+=%s"
          % (tau, eval_perm("zeta-minus", tau), eval_perm("zeta-plus", tau)))
