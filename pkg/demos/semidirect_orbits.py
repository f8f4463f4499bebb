"""
Orbit dimensions in a semidirect sum
====================================

s = r + u with u abelian.  The s-orbit and r-orbit of gamma = (mu, lambda)
have the same dimension exactly when lambda = 0.
"""

import random

from sharedorbits.poisson import random_rational, standard_semidirect, theorem7_transitivity, semidirect_trials

s = standard_semidirect("sl2")
rng = random.Random(0)
for lam_zero in (True, False):
    mu = random_rational(rng, s.r.dim)
    lam = random_rational(rng, s.u.dim, zero=lam_zero)
    ds, dr, eq = theorem7_transitivity(s, mu, lam)
    print(f"lambda={lam}: dim s.gamma={ds}, dim r.gamma={dr}, equal={eq}")

for name in ("sl2", "sl3", "sp4"):
    print(name, semidirect_trials(standard_semidirect(name)))
