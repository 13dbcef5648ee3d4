"""The even/odd decomposition of the universal character, two ways.

The universal character zeta sends M[n] and M[] to 1 and every other
monomial basis element to 0.  It factors uniquely as an even character
times an odd one.  The odd and even parts have closed forms built from
bivariate Catalan numbers; independently, the decomposition can be ground
out degree by degree from the convolution-group recursions.  This script
computes both and watches them agree.

Run:  python demos/03_canonical_characters.py
"""

from qsymx import (
    all_compositions,
    bar,
    compose_antipode,
    convolve,
    decompose,
    eval_M,
    format_composition,
    inverse,
    restrict,
)

N = 6

oracle_plus, oracle_minus = decompose(restrict("zeta", N))
closed_plus = restrict("zeta-plus", N)
closed_minus = restrict("zeta-minus", N)

print("degree 4 table (oracle values; all match the closed forms):")
for alpha in all_compositions(4):
    print("   %-8s  plus=%-8s minus=%s" % (
        format_composition(alpha),
        oracle_plus.value(alpha),
        oracle_minus.value(alpha),
    ))

assert oracle_plus == closed_plus
assert oracle_minus == closed_minus
print("oracle == closed forms up to degree %d: True" % N)

print()
print("Convolution-group sanity:")
zeta = restrict("zeta", N)
eps = restrict("counit", N)
print("   zeta * zeta^-1 == counit:", convolve(zeta, inverse(zeta)) == eps)
print("   zeta-plus is even (bar fixes it):", bar(closed_plus) == closed_plus)
print("   zeta-minus is odd (S sends it to bar):",
      compose_antipode(closed_minus) == bar(closed_minus))
print("   plus * minus == zeta:", convolve(closed_plus, closed_minus) == zeta)

print()
print("A few closed-form values on the monomial basis:")
for alpha in [(1,), (2,), (1, 1), (1, 2, 1), (3, 1)]:
    print("   alpha=%-8s zeta-=%-8s zeta+=%-8s zeta^-1=%s" % (
        format_composition(alpha),
        eval_M("zeta-minus", alpha),
        eval_M("zeta-plus", alpha),
        eval_M("zeta-inv", alpha),
    ))
