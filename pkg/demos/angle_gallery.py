"""Internal and external angles: exact branches next to Monte Carlo estimates.

Cube angles and codimension-one pairs are exact powers of 1/2.  The classical
tetrahedron angles have closed forms worth comparing against the sampler.
"""

import math

from polyproj import Family, MCConfig, external_angle, internal_angle

cfg = MCConfig(samples=300_000, seed=0)

print("Exact branches")
print("  cube externals gamma(Q_g, P_4):",
      [str(external_angle(Family.CUBE, 4, g).exact_value) for g in range(5)])
print("  facet external, any family:   ",
      external_angle(Family.SIMPLEX, 5, 4).exact_value)
print("  edge-in-triangle internal:    ",
      internal_angle(Family.SIMPLEX, 5, 1, 2).exact_value)

print()
print("Tetrahedron angles vs closed forms")
known = {
    "vertex internal beta(Q_0, Q_3)": (
        internal_angle(Family.SIMPLEX, 3, 0, 3, cfg),
        (3 * math.acos(1 / 3) - math.pi) / (4 * math.pi),
    ),
    "edge internal beta(Q_1, Q_3)": (
        internal_angle(Family.SIMPLEX, 3, 1, 3, cfg),
        math.acos(1 / 3) / (2 * math.pi),
    ),
    "edge external gamma(Q_1, P_3)": (
        external_angle(Family.SIMPLEX, 3, 1, cfg),
        (math.pi - math.acos(1 / 3)) / (2 * math.pi),
    ),
}
for name, (est, exact) in known.items():
    sigma = abs(est.value - exact) / est.std_error
    print(f"  {name}: {est.value:.6f} +- {est.std_error:.6f}"
          f"  (closed form {exact:.6f}, {sigma:.1f} sigma off)")

print()
print("Vertex external angles sum to 1 over the whole polytope")
for family in Family:
    n = 5
    est = external_angle(family, n, 0, cfg)
    count = {"simplex": n + 1, "crosspolytope": 2 * n, "cube": 2**n}[family.value]
    total = count * est.value
    tag = "exact" if est.method == "exact" else f"+- {count * est.std_error:.4f}"
    print(f"  {family.value:>14}: {count} vertices x {est.value:.6f} = {total:.6f} ({tag})")
