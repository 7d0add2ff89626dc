"""Expected face counts of random shadows of the three regular series.

Projecting the n-cube to R^d gives exact rational expectations; the simplex
and crosspolytope need Monte Carlo angles.  Every run is reproducible: the
estimates depend only on (samples, seed).
"""

from polyproj import Family, MCConfig, expected_f_projection, expected_f_vector

cfg = MCConfig(samples=200_000, seed=0)

print("Exact expected f-vectors of projected cubes")
print(f"{'n':>3} {'d':>3}  E f_0   E f_1   E f_2")
for n in (4, 6, 8, 10):
    fv = expected_f_vector(family=Family.CUBE, n=n, d=3)
    cells = "  ".join(f"{fv.entries[k].value:6.0f}" for k in sorted(fv.entries))
    print(f"{n:>3} {3:>3}  {cells}")

print()
print("Planar shadows: expected vertex count (Monte Carlo,", cfg.samples, "samples)")
print(f"{'n':>3} {'simplex':>12} {'crosspolytope':>14} {'cube':>8}")
for n in (3, 5, 7, 9):
    row = []
    for family in (Family.SIMPLEX, Family.CROSSPOLYTOPE):
        est = expected_f_projection(family, n, 2, 0, cfg)
        row.append(f"{est.value:.3f}+-{est.std_error:.3f}")
    cube = expected_f_projection(Family.CUBE, n, 2, 0)
    print(f"{n:>3} {row[0]:>12} {row[1]:>14} {cube.value:>8.0f}")

print()
print("A polygon has as many edges as vertices, and the two sums agree exactly:")
v = expected_f_projection(Family.SIMPLEX, 7, 2, 0, cfg)
e = expected_f_projection(Family.SIMPLEX, 7, 2, 1, cfg)
print(f"  simplex n=7, d=2: E f_0 = {v.value!r}, E f_1 = {e.value!r}")
