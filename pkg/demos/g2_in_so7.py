"""
G2 inside so(7)
===============

The 8-dimensional orbit of G2 and the 7-dimensional module that completes
g2 to so(7).
"""

from sharedorbits import chevalley_algebra, orbit_dim, orbit_element
from sharedorbits.modules import realize_module
from sharedorbits.nilorbits import OrbitSpec, jacobson_morozov
from sharedorbits.sharedpairs import find_record, r2_decomposition, v2_dimension

# the highest short root vector of G2
L = chevalley_algebra("G2")
e = orbit_element(L, OrbitSpec.short_root("G2"))
print("dim g2 =", L.dim, " orbit dim =", orbit_dim(L, e))

# so(7) has the same number: its minimal orbit
B3 = chevalley_algebra("B3")
print("minimal orbit of so(7):", orbit_dim(B3, B3.e(B3.rs.highest_root)))

# the degree-2 functions beyond g2 come from V[2] for each irreducible V
triple = jacobson_morozov(L, e)
for hw in [(1, 0), (2, 0), (0, 2)]:
    V = realize_module(L, hw)
    print(f"V{hw}: dim {V.dim}, dim V[2] = {v2_dimension(L, triple, V)}")

rec = find_record(1)
print("R[2] beyond g2:", r2_decomposition(L, rec.orbit))
print("14 + 7 =", 14 + 7, "= dim so(7) =", B3.dim)
