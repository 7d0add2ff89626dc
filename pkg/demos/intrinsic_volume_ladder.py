"""Intrinsic volumes of the regular series, exact where possible.

V_k sums (external angle x k-volume) over the k-faces.  Cubes give binomial
coefficients exactly; the simplex and crosspolytope ladders grow strictly
with n, visible here well beyond the Monte Carlo error bars.
"""

from polyproj import Family, MCConfig, intrinsic_volume

cfg = MCConfig(samples=200_000, seed=0)

print("Cube: V_k(P_n) = C(n, k), exact")
for n in (3, 6, 10):
    vals = [intrinsic_volume(Family.CUBE, n, k).exact_value for k in range(n + 1)]
    print(f"  n={n:>2}: {vals}")

print()
for family in (Family.SIMPLEX, Family.CROSSPOLYTOPE):
    print(f"{family.value}: V_1 and V_2 over n (Monte Carlo)")
    print(f"{'n':>3} {'V_1':>9} {'se':>8} {'V_2':>9} {'se':>8}")
    for n in range(2, 8):
        v1 = intrinsic_volume(family, n, 1, cfg)
        v2 = intrinsic_volume(family, n, 2, cfg)
        print(f"{n:>3} {v1.value:>9.4f} {v1.std_error:>8.4f} {v2.value:>9.4f} {v2.std_error:>8.4f}")
    print()

top = intrinsic_volume(Family.CROSSPOLYTOPE, 5, 5)
print("Top-dimensional volumes are exact, e.g. the 5-crosspolytope fills",
      f"{top.exact_value} = {top.value:.6f} of its own dimension.")
