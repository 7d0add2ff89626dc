"""Solid angles of polyhedral cones by Gaussian sampling, with exact branches.

The angle of a cone C inside its linear hull L is the probability that a
standard Gaussian vector on L lands in C.  Two constructions cover everything
the projection formulas need:

  normal cone    Nor(Q_g, P_n) = {u in lin(P_n - x) : <u, v - x> <= 0 for all
                 vertices v}, x a relative-interior point of Q_g; its angle is
                 the external angle gamma(Q_g, P_n).
  internal cone  pos(Q_g - bary(Q_k)), the positive hull of a face seen from
                 the barycenter of one of its subfaces; its angle is the
                 internal angle beta(Q_k, Q_g).

Cube angles and codimension <= 1 pairs are exact powers of 1/2 and never hit
the sampler.  Monte Carlo estimates are deterministic: every chunk of samples
draws from a counter-based stream derived from the angle's identity, so values
do not depend on evaluation order or worker count.  Estimates are memoized
in-process and optionally persisted to an append-only text cache.

Internal angles of simplex and crosspolytope faces coincide: every proper face
of either series is a regular simplex with edge sqrt(2), and the canonical
coordinates of (Q_k, Q_g) agree.  Internal estimates are therefore computed
once on a minimal canonical embedding and shared across the two families.
"""

from __future__ import annotations

import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    InvalidArgumentError,
    InvalidDimensionError,
    InvalidFaceError,
    InvalidPairError,
    NumericError,
)
from .families import Family, barycenter, canonical_face, vertices
from .solvers import robust_nnls
from .streams import ANGLE_SAMPLES, FAMILY_CODES, KIND_EXTERNAL, KIND_INTERNAL, chunk_counts, derive_generator

ORTHONORMALITY_TOL = 1e-12
SPAN_TOL = 1e-10
HALFSPACE_TOL = 1e-10
NNLS_TOL = 1e-8


@dataclass(frozen=True)
class MCConfig:
    """Sampling budget and stream identity for Monte Carlo angle estimation."""

    samples: int = 1_000_000
    seed: int = 0
    workers: int = 1
    chunk_size: int = 1 << 15
    cache_path: str | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidArgumentError(f"samples must be >= 1, got {self.samples}")
        if self.seed < 0:
            raise InvalidArgumentError(f"seed must be >= 0, got {self.seed}")
        if self.workers < 1:
            raise InvalidArgumentError(f"workers must be >= 1, got {self.workers}")
        if self.chunk_size < 1:
            raise InvalidArgumentError(f"chunk_size must be >= 1, got {self.chunk_size}")


@dataclass(frozen=True)
class AngleEstimate:
    value: float
    std_error: float
    method: str  # "exact" or "monte_carlo"
    samples: int
    exact_value: Fraction | None = None

    def __post_init__(self):
        if not (-1e-12 <= self.value <= 1 + 1e-12):
            raise NumericError(f"angle {self.value} outside [0, 1]")
        if self.method == "exact" and self.std_error != 0.0:
            raise NumericError("exact angle must have zero std error")


def _exact_angle(frac: Fraction | int) -> AngleEstimate:
    frac = Fraction(frac)
    return AngleEstimate(float(frac), 0.0, "exact", 0, frac)


@dataclass(frozen=True)
class NormalConeData:
    """Membership oracle data: u in cone iff <u, v - apex> <= tol for all vertices v."""

    apex: np.ndarray
    polytope_vertices: np.ndarray


@dataclass(frozen=True)
class PositiveHullData:
    """Membership oracle data: u in cone iff u is a nonnegative combination of generators."""

    generators: np.ndarray


@dataclass(frozen=True)
class Cone:
    """A polyhedral cone: orthonormal frame of its linear hull plus a membership oracle.

    frame rows are unit vectors in the ambient space; seed_path is the identity
    tuple mixed into sampling streams so distinct cones never share randomness.
    """

    frame: np.ndarray
    data: NormalConeData | PositiveHullData
    seed_path: tuple[int, ...] = ()

    def __post_init__(self):
        f = self.frame
        if f.ndim != 2:
            raise InvalidArgumentError("frame must be a 2-d array (rows = basis vectors)")
        gram = f @ f.T
        if gram.size and np.abs(gram - np.eye(f.shape[0])).max() > ORTHONORMALITY_TOL:
            raise NumericError("frame rows are not orthonormal to 1e-12")
        if isinstance(self.data, PositiveHullData):
            g = self.data.generators
            resid = g - (g @ f.T) @ f
            scale = 1.0 + np.linalg.norm(g, axis=1)
            if np.any(np.linalg.norm(resid, axis=1) > SPAN_TOL * scale):
                raise NumericError("generators leave the frame span beyond 1e-10")

    @property
    def dim(self) -> int:
        return self.frame.shape[0]


def orthonormal_basis(vecs: np.ndarray, drop_tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of span(rows) by modified Gram-Schmidt with re-orthogonalization.

    Rows whose residual after projection is below drop_tol * (1 + |row|) are
    treated as dependent and dropped.
    """
    vecs = np.asarray(vecs, dtype=float)
    if vecs.ndim != 2:
        raise InvalidArgumentError("expected a 2-d array of row vectors")
    basis: list[np.ndarray] = []
    for v in vecs:
        w = v.copy()
        for _ in range(2):  # second pass controls cancellation for near-dependent rows
            for b in basis:
                w -= (w @ b) * b
        nw = np.linalg.norm(w)
        if nw > drop_tol * (1.0 + np.linalg.norm(v)):
            basis.append(w / nw)
    if not basis:
        return np.zeros((0, vecs.shape[1]))
    return np.vstack(basis)


def complement_basis(span_vecs: np.ndarray, within_basis: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of span(span_vecs) inside a subspace.

    within_basis must span a subspace containing span(span_vecs).
    """
    sub = orthonormal_basis(span_vecs)
    if sub.shape[0] == 0:
        return orthonormal_basis(within_basis)
    stacked = np.vstack([sub, np.asarray(within_basis, dtype=float)])
    return orthonormal_basis(stacked)[sub.shape[0] :]


def normal_cone(family: Family, n: int, g: int) -> Cone:
    """Nor(Q_g, P_n) as a Cone, frame spanning lin(P_n - x) ∩ lin(Q_g - x)^perp.

    Requires 0 <= g <= n-1; the g = n case is the trivial cone {0} and is
    handled exactly by external_angle.
    """
    face = canonical_face(family, n, g)
    if g > n - 1:
        raise InvalidFaceError(f"normal cone needs a proper face, got g = {g} = n")
    verts = vertices(family, n).astype(float)
    x = barycenter(face)
    lin_p = orthonormal_basis(verts - x)
    frame = complement_basis(face.vertices - x, lin_p)
    if frame.shape[0] != n - g:
        raise NumericError(
            f"normal cone frame has dimension {frame.shape[0]}, expected {n - g}"
        )
    return Cone(
        frame,
        NormalConeData(x, verts),
        seed_path=(KIND_EXTERNAL, FAMILY_CODES[family.value], n, g),
    )


def internal_cone(family: Family, n: int, k: int, g: int) -> Cone:
    """pos(Q_g - bary(Q_k)) as a Cone; requires 0 <= k <= g with both faces canonical."""
    face_g = canonical_face(family, n, g)
    face_k = canonical_face(family, n, k)
    if k > g:
        raise InvalidPairError(f"Q_{k} is not a face of Q_{g} (k > g)")
    gens = face_g.vertices - barycenter(face_k)
    frame = orthonormal_basis(gens)
    if frame.shape[0] != g:
        raise NumericError(f"internal cone frame has dimension {frame.shape[0]}, expected {g}")
    return Cone(
        frame,
        PositiveHullData(gens.astype(float)),
        seed_path=(KIND_INTERNAL, FAMILY_CODES[family.value], k, g),
    )


def _count_normal(data: NormalConeData, u: np.ndarray) -> int:
    diffs = data.polytope_vertices - data.apex
    scores = u @ diffs.T
    tol = HALFSPACE_TOL * (1.0 + np.linalg.norm(u, axis=1))
    return int(np.count_nonzero(scores.max(axis=1) <= tol))


def _count_positive_hull(data: PositiveHullData, u: np.ndarray, base_index: int) -> int:
    a = data.generators.T  # ambient x generators
    hits = 0
    norms = 1.0 + np.linalg.norm(u, axis=1)
    for i, row in enumerate(u):
        try:
            _, resid = robust_nnls(a, row)
        except RuntimeError as exc:  # iteration cap inside the solver
            raise NumericError(str(exc), sample_index=base_index + i) from exc
        if resid <= NNLS_TOL * norms[i]:
            hits += 1
    return hits


def cone_angle(cone: Cone, cfg: MCConfig | None = None) -> AngleEstimate:
    """Monte Carlo estimate of the solid angle of `cone` within its linear hull.

    Samples standard Gaussians in frame coordinates, counts membership, and
    returns hit rate with binomial standard error.  A zero-dimensional frame
    means the cone is {0}: angle exactly 1.
    """
    cfg = cfg or MCConfig()
    if cone.dim == 0:
        return _exact_angle(1)
    counts = chunk_counts(cfg.samples, cfg.chunk_size)

    def run_chunk(job: tuple[int, int]) -> int:
        idx, count = job
        rng = derive_generator(cfg.seed, ANGLE_SAMPLES, *cone.seed_path, idx)
        z = rng.standard_normal((count, cone.dim))
        u = z @ cone.frame
        if isinstance(cone.data, NormalConeData):
            return _count_normal(cone.data, u)
        return _count_positive_hull(cone.data, u, idx * cfg.chunk_size)

    jobs = list(enumerate(counts))
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            hits = sum(pool.map(run_chunk, jobs))
    else:
        hits = sum(map(run_chunk, jobs))
    p = hits / cfg.samples
    se = math.sqrt(p * (1.0 - p) / cfg.samples)
    return AngleEstimate(p, se, "monte_carlo", cfg.samples)


# ---------------------------------------------------------------------------
# memoization and the optional append-only cache file

_MEMO: dict[tuple, AngleEstimate] = {}
_LOCK = threading.Lock()
_LOADED_CACHES: set[str] = set()

# internal angles are shared between simplex and crosspolytope (identical
# canonical geometry); this token marks such rows in memo keys and cache files
_SHARED_FACE = "simplexface"


def clear_angle_memo() -> None:
    with _LOCK:
        _MEMO.clear()
        _LOADED_CACHES.clear()


def _ensure_cache_loaded(path: str) -> None:
    apath = os.path.abspath(path)
    with _LOCK:
        if apath in _LOADED_CACHES:
            return
        _LOADED_CACHES.add(apath)
        if not os.path.exists(apath):
            return
        with open(apath, "r", encoding="utf-8") as fh:
            for line in fh:
                parts = line.split()
                if len(parts) != 9 or parts[0].startswith("#"):
                    continue
                fam, n_s, k_s, g_s, kind, samples_s, seed_s, value_s, stderr_s = parts
                key = (kind, fam, int(n_s), int(k_s), int(g_s), int(samples_s), int(seed_s))
                est = AngleEstimate(
                    float(value_s), float(stderr_s), "monte_carlo", int(samples_s)
                )
                _MEMO.setdefault(key, est)


def _append_cache(path: str, key: tuple, est: AngleEstimate) -> None:
    kind, fam, n, k, g, samples, seed = key
    with _LOCK:
        with open(path, "a", encoding="utf-8") as fh:
            fh.write(f"{fam} {n} {k} {g} {kind} {samples} {seed} {est.value!r} {est.std_error!r}\n")


def _memoized_angle(key: tuple, build, cfg: MCConfig) -> AngleEstimate:
    if cfg.cache_path:
        _ensure_cache_loaded(cfg.cache_path)
    with _LOCK:
        hit = _MEMO.get(key)
    if hit is not None:
        return hit
    est = cone_angle(build(), cfg)
    with _LOCK:
        _MEMO[key] = est
    if cfg.cache_path:
        _append_cache(cfg.cache_path, key, est)
    return est


def _check_index(name: str, v) -> int:
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
        raise InvalidArgumentError(f"{name} must be an integer, got {v!r}")
    return int(v)


def external_angle(family: Family, n: int, g: int, cfg: MCConfig | None = None) -> AngleEstimate:
    """gamma(Q_g, P_n): the external angle of P_n at its canonical g-face.

    Exact branches: cubes (2^-(n-g)), g = n (angle 1), g = n-1 (facet, 1/2).
    Everything else is estimated by sampling the normal cone.
    """
    cfg = cfg or MCConfig()
    family = Family(family)
    n = _check_index("n", n)
    g = _check_index("g", g)
    if n < 1:
        raise InvalidDimensionError(f"polytope dimension must be >= 1, got {n}")
    if g < 0 or g > n:
        raise InvalidFaceError(f"external angle needs 0 <= g <= n, got g={g}, n={n}")
    if family is Family.CUBE:
        return _exact_angle(Fraction(1, 2 ** (n - g)))
    if g == n:
        return _exact_angle(1)
    if g == n - 1:
        return _exact_angle(Fraction(1, 2))
    key = ("ext", family.value, n, -1, g, cfg.samples, cfg.seed)
    return _memoized_angle(key, lambda: normal_cone(family, n, g), cfg)


def internal_angle(
    family: Family, n: int, k: int, g: int, cfg: MCConfig | None = None
) -> AngleEstimate:
    """beta(Q_k, Q_g): the internal angle of Q_g at its subface Q_k.

    Exact branches: k > g (0), k = g (1, the empty-cone convention that makes
    the top projection term reproduce facet counts), cubes (2^-(g-k)), and
    g = k+1 (1/2).  The Monte Carlo branch samples the positive hull on a
    minimal canonical embedding; the value does not depend on n, and simplex
    and crosspolytope share it because their proper faces are the same regular
    simplices.
    """
    cfg = cfg or MCConfig()
    family = Family(family)
    n = _check_index("n", n)
    k = _check_index("k", k)
    g = _check_index("g", g)
    if n < 1:
        raise InvalidDimensionError(f"polytope dimension must be >= 1, got {n}")
    if k < 0 or g < 0:
        raise InvalidArgumentError(f"face dimensions must be >= 0, got k={k}, g={g}")
    hi = n - 1 if family is Family.CROSSPOLYTOPE else n
    if g > hi:
        raise InvalidFaceError(
            f"no canonical {g}-face of the {family.value} P_{n} (valid range 0..{hi})"
        )
    if k > g:
        return _exact_angle(0)
    if k == g:
        return _exact_angle(1)
    if family is Family.CUBE:
        return _exact_angle(Fraction(1, 2 ** (g - k)))
    if g == k + 1:
        return _exact_angle(Fraction(1, 2))
    key = ("int", _SHARED_FACE, 0, k, g, cfg.samples, cfg.seed)
    return _memoized_angle(key, lambda: _canonical_internal_cone(k, g), cfg)


def _canonical_internal_cone(k: int, g: int) -> Cone:
    """Internal cone of the face pair in its smallest simplex embedding.

    Simplex and crosspolytope proper faces share these canonical coordinates;
    the seed path uses family code 0 to mark the shared geometry.
    """
    cone = internal_cone(Family.SIMPLEX, g, k, g)
    return Cone(cone.frame, cone.data, seed_path=(KIND_INTERNAL, 0, k, g))
