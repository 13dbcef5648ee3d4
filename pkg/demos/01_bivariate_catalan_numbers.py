"""A tour of the bivariate Catalan numbers C(m,n) = (2m)!(2n)!/(m!(m+n)!n!).

Run:  python demos/01_bivariate_catalan_numbers.py
"""

from fractions import Fraction

from qsymx import (
    binary_digit_sum,
    bivariate_catalan,
    catalan,
    central_binomial,
    central_catalan,
    half_binomial,
    two_adic_valuation,
)

print("A small table of C(m, n):")
print("      " + "".join("%8d" % n for n in range(6)))
for m in range(6):
    row = "".join("%8d" % bivariate_catalan(m, n) for n in range(6))
    print("m=%d   %s" % (m, row))

print()
print("The top row is the central binomial coefficients B(n) = C(0, n):")
print("   ", [central_binomial(n) for n in range(8)])
print("Half the second row is the Catalan numbers C(1, n)/2:")
print("   ", [catalan(n) for n in range(8)])

print()
print("Every C(m, n) except C(0,0) is even, and the exact power of 2 dividing")
print("C(m, n) is the number of 1 bits of m + n:")
for (m, n) in [(1, 2), (2, 3), (4, 4), (5, 10)]:
    v = two_adic_valuation(bivariate_catalan(m, n))
    print("   v2(C(%d,%d)) = %d = s2(%d)" % (m, n, v, m + n), "->", binary_digit_sum(m + n))

print()
print("C(m, n) is a disguised binomial coefficient at a half-integer:")
for (m, n) in [(0, 1), (2, 2), (3, 1)]:
    bridge = (-1) ** n * 4 ** (m + n) * half_binomial(m, m + n)
    print("   (-1)^%d 4^%d binom(%d - 1/2, %d) = %s = C(%d,%d)"
          % (n, m + n, m, m + n, bridge, m, n))

print()
print("The four central Catalan families (note the 1/2 at family 3, h=0):")
for family in (1, 2, 3, 4):
    values = [central_catalan(family, h) for h in range(5)]
    print("   C_%d: %s" % (family, values))

print()
print("One of their convolution identities (index sum 8):")
h = 4
lhs = sum(central_catalan(4, j) * central_catalan(4, h - j) for j in range(h + 1))
rhs = 2 * sum(central_catalan(3, j) * central_catalan(1, h - j) for j in range(h + 1))
print("   sum C4 C4 = %s,  2 sum C3 C1 = %s" % (lhs, rhs))
assert lhs == rhs and isinstance(lhs, Fraction)
