"""
Closed-form threshold machinery
===============================

Where does the satisfiable/unsatisfiable transition sit as edge density
r = m/n grows?  First-moment counting gives an upper bound; a weighted
second moment with a per-edge weight gamma^W plus a Laplace-method
condition gives the matching lower bound.  Everything here is a closed
form or a deterministic grid computation.
"""

import math

from dcl import (
    psi, f_alpha, g_alpha, laplace_check, find_gamma, constants,
    first_moment_rate, expected_weighted_X, second_moment_ratio,
    bicycle_expectation_bound, alt_cycle_free_lower_bound,
)

for k in (2, 3, 4, 7):
    c = constants(k)
    print(f"k={k}: upper={c.upper:.5f} lower={c.lower:.5f} "
          f"ap={c.ap_condition:.5f} exact_root={c.first_moment_root:.5f}")

# the first-moment rate is the exponential growth rate of E[#covers];
# negative rate at every balance point certifies almost-sure UNSAT
print()
for r in (2.0, 2.6, 3.0):
    fm = first_moment_rate(3, r)
    verdict = "covers vanish" if fm.max_rate < 0 else "inconclusive"
    print(f"k=3 r={r}: max rate {fm.max_rate:+.4f} at x={fm.argmax_x:.3f} ({verdict})")

# the weighted moment building blocks
print()
print("psi(0.9, 3) =", psi(0.9, 3))
print("f(1/4) = psi^2:", f_alpha(0.25, 0.9, 3), "=", psi(0.9, 3) ** 2)
print("g(1/2) = 2 psi^(4r):", g_alpha(0.5, 0.9, 3, 1.0), "=", 2 * psi(0.9, 3) ** 4)

# the Laplace condition picks out the gammas for which the second-moment
# ratio stays bounded; find_gamma searches for one
g4 = find_gamma(4, 1.0)
print()
print("k=4 r=1.0: gamma =", g4, "passed:", laplace_check(4, 1.0, g4).passed)
rep = laplace_check(4, 10.0, 1.0)
print("k=4 r=10 fails:", rep.failure_reason)

# with a passing gamma the ratio E[X^2]/E[X]^2 stabilises as n grows,
# which by Chebyshev lower-bounds the satisfiability probability
print()
for n in (200, 400, 800, 1600):
    ratio = second_moment_ratio(n, 4, 1.0, g4)
    print(f"n={n}: ratio={ratio:.6f} prob lower bound={1 / ratio:.6f}")

# expected weighted count, log scale, n=8 toy size
print()
print("ln E[X] (n=8, k=3, r=1, gamma=0.9):", expected_weighted_X(8, 3, 1.0, 0.9))

# sparse-regime bounds for the k=2 story
print()
print("E[#obstructions] bound at c=0.5, n=100:", bicycle_expectation_bound(0.5, 100))
print("Pr[no alternating cycle] >=", alt_cycle_free_lower_bound(0.5),
      "=", math.exp(-8))
