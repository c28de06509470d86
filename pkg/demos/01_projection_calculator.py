"""
Projection classes on the odd quantum sphere: a calculator tour
===============================================================

Every projection over the odd quantum sphere algebra is equivalent to a
normal form P[j,k]: k copies of a single level-j building block, or the
zero class P[0,0].  This script walks through the arithmetic those normal
forms obey.
"""

from qproj import (ProjClass, boxplus, normalize, normalize_expression,
                   parse_expression, rank, rho, zero_class)

# 1. Building classes
# -------------------
# A class lives over a fixed ambient sphere, indexed by n.  Here n = 3.
n = 3

p = ProjClass(n, j=1, k=2)
q = ProjClass(n, j=2, k=5)
print("p =", p)
print("q =", q)
print("rank of p:", rank(p), "  rank of q:", rank(q))

# Only level 0 contributes free rank; every deeper class has rank 0.
top = ProjClass(n, j=0, k=4)
print("rank of", top, "is", rank(top))

# 2. Direct sums
# --------------
# boxplus is the direct-sum operation.  Equal levels add multiplicities;
# different levels collapse to the shallower one (absorption).
print()
print("p (+) p =", boxplus(p, p))
print("p (+) q =", boxplus(p, q), "   <- deeper summand is absorbed")
print("p (+) 0 =", boxplus(p, zero_class(n)))

# 3. Normalizing a long expression
# --------------------------------
# normalize folds any list of classes into a single normal form.
terms = [ProjClass(n, 2, 1), ProjClass(n, 1, 3), ProjClass(n, 1, 1),
         ProjClass(n, 3, 7)]
print()
print("sum of", [str(t) for t in terms], "=", normalize(terms))

# There is also a small expression grammar, the same one the command line
# tool accepts.  parse_expression gives back the raw terms,
# normalize_expression folds them in one go.
expr = "P[1,2] (+) P[2,5] (+) P[1,1]"
print(repr(expr), "->", [str(t) for t in parse_expression(expr, n)])
print(repr(expr), "normalizes to", normalize_expression(expr, n))

# 4. The complete invariant
# -------------------------
# rho attaches to each class a vector with n + 1 entries drawn from
# {0, 1, 2, ..., inf}.  Two classes are equivalent exactly when their rho
# vectors agree, so the vector is a faithful fingerprint.
print()
for c in (zero_class(n), ProjClass(n, 0, 2), p, q):
    print("rho(%s) = %s" % (c, rho(c)))

# rho turns boxplus into entrywise saturating addition (inf + anything
# stays inf), so sums of classes can be tracked coordinate by coordinate.
lhs = rho(boxplus(p, q))
rhs = rho(p) + rho(q)
print("rho(p (+) q) =", lhs, " equals rho(p) + rho(q):", lhs == rhs)

# 5. Cancellation fails at rank zero
# ----------------------------------
# Absorption makes the monoid non-cancellative: adding P[0,1] to two
# different positive-level classes gives the same answer.
a = ProjClass(2, 1, 1)
b = ProjClass(2, 2, 1)
u = ProjClass(2, 0, 1)
print()
print("a =", a, " b =", b, " and a == b is", a == b)
print("a (+) P[0,1] =", boxplus(a, u))
print("b (+) P[0,1] =", boxplus(b, u))
print("so x (+) u = y (+) u does not force x = y at rank zero.")

# Classes of positive rank do cancel; the verification suite sweeps that
# claim over a grid (see the cancellation group in qproj.suite).
