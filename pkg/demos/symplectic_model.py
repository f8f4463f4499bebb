"""
The minimal orbit of sp(2n) from C^{2n}
=======================================

Quadratic functions on C^{2n} close under the Poisson bracket to sp(2n);
linear functions and constants form a Heisenberg algebra.
"""

from sharedorbits.poisson import (
    heisenberg_check,
    moment_image_rank_one,
    quadratic_span_dim,
    sp_min_cover_model,
)

for n in (1, 2, 3):
    model = sp_min_cover_model(n)
    print(f"n={n}: quadratics span {quadratic_span_dim(model)} = dim sp({2 * n}),"
          f" Heisenberg {heisenberg_check(model)}, rank-one moment image {moment_image_rank_one(model)}")

# a bracket, by hand
model = sp_min_cover_model(2)
z1, z2, z3, z4 = model.z
alg = model.algebra
print("{z1, z3} =", alg.bracket(z1, z3))
print("{z1^2, z3^2} =", alg.bracket(z1 * z1, z3 * z3))
