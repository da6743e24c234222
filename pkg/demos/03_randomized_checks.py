"""
Randomized structure checks on a presented ring
===============================================

"""

import random

# Each check builds random elements of the quotient ring, tests one
# structural property with exact arithmetic, and returns a small report
# with witnesses for any failure.
from lndfilt import (
    RingPresentation,
    al_chain_check,
    degree_consistency,
    graded_property_check,
    graded_relations_check,
    kernel_check,
)

# A ring with nontrivial coefficient tails:
#     P = S^2 + (X^2 + 1),  Q = Y^2 + X*Y  on  n = 2, e = 1.
ring = RingPresentation.full(2, 1, ["X^2 + 1", "0"], ["X", "0"])
print("ring:", ring.fingerprint())
rng = random.Random(99)

# Degree consistency: the iterated-derivation degree of a random element
# must match the top monomial-formula degree of its canonical form.
report = degree_consistency(ring, samples=80, degree_bound=9, rng=rng)
print(report)

# Kernel check: inside a finite degree window, the kernel of the
# derivation is exactly the span of the pure x-powers.  This is a rank
# computation over the integers, no floating point involved.
report = kernel_check(ring, degree_bound=8)
print(report)

# The a_l chain: the specific elements tying consecutive filtration
# layers together satisfy D(a_{l+1}) = unit * x^(n+e) * a_l.
report = al_chain_check(ring)
print(report)

# Graded relations: the leading classes of the generators satisfy
#     gr(x)^n gr(y) = gr(s)^d  and  gr(x)^e gr(z) = gr(y)^m.
report = graded_relations_check(ring)
print(report)

# Graded multiplicativity: for random pairs, gr(a) * gr(b) either equals
# gr(a*b) with degrees adding, or the product degree genuinely drops.
report = graded_property_check(ring, samples=40, degree_bound=8, rng=rng)
print(report)

# A deliberately broken property, to show what a failing report looks
# like: ask for degree consistency against a budget that is too small.
from lndfilt import BudgetExceededError, canonical_derivation

D = canonical_derivation(ring)
z = ring.generator("Z")
try:
    D.degree(z, bound=2)
except BudgetExceededError as err:
    print("budget too small:", err)
