import math
from fractions import Fraction

import numpy as np
import pytest

from polyproj import (
    AngleEstimate,
    Cone,
    Family,
    InvalidArgumentError,
    InvalidFaceError,
    InvalidPairError,
    MCConfig,
    NumericError,
    PositiveHullData,
    canonical_face,
    clear_angle_memo,
    complement_basis,
    cone_angle,
    external_angle,
    internal_angle,
    internal_cone,
    normal_cone,
    orthonormal_basis,
)
from polyproj.solvers import robust_nnls
from polyproj.streams import chunk_counts, derive_generator

from oracles import (
    TETRA_EDGE_ANGLE,
    TRIANGLE_VERTEX_ANGLE,
    cross_external_quadrature,
    internal_hrep_member,
    simplex_external_quadrature,
)

FAST = MCConfig(samples=20_000, seed=0)


# ---------------------------------------------------------------------------
# bases


def test_orthonormal_basis_properties():
    rng = np.random.default_rng(3)
    vecs = rng.standard_normal((4, 7))
    stacked = np.vstack([vecs, vecs[1] + 2 * vecs[3]])  # dependent row gets dropped
    basis = orthonormal_basis(stacked)
    assert basis.shape == (4, 7)
    assert np.allclose(basis @ basis.T, np.eye(4), atol=1e-12)
    # original rows lie in the span
    resid = vecs - (vecs @ basis.T) @ basis
    assert np.abs(resid).max() < 1e-10


def test_orthonormal_basis_zero_input():
    assert orthonormal_basis(np.zeros((3, 5))).shape == (0, 5)
    with pytest.raises(InvalidArgumentError):
        orthonormal_basis(np.zeros(5))


def test_complement_basis_splits_subspace():
    rng = np.random.default_rng(4)
    within = orthonormal_basis(rng.standard_normal((5, 8)))
    sub = rng.standard_normal((2, 8)) @ within.T @ within  # 2 directions inside
    comp = complement_basis(sub, within)
    assert comp.shape == (3, 8)
    assert np.abs(comp @ orthonormal_basis(sub).T).max() < 1e-10
    # complement stays inside the enclosing subspace
    resid = comp - (comp @ within.T) @ within
    assert np.abs(resid).max() < 1e-10
    assert complement_basis(np.zeros((1, 8)), within).shape == (5, 8)


# ---------------------------------------------------------------------------
# cone construction


@pytest.mark.parametrize("family,n,g", [
    (Family.SIMPLEX, 4, 1),
    (Family.CROSSPOLYTOPE, 4, 1),
    (Family.CUBE, 4, 2),
])
def test_normal_cone_frame(family, n, g):
    cone = normal_cone(family, n, g)
    assert cone.dim == n - g
    f = cone.frame
    assert np.allclose(f @ f.T, np.eye(n - g), atol=1e-12)
    # frame is orthogonal to the face's affine hull
    face = canonical_face(family, n, g)
    dirs = face.vertices - cone.data.apex
    assert np.abs(f @ dirs.T).max() < 1e-10


def test_normal_cone_rejects_improper_face():
    with pytest.raises(InvalidFaceError):
        normal_cone(Family.SIMPLEX, 3, 3)


def test_internal_cone_frame_and_errors():
    cone = internal_cone(Family.SIMPLEX, 4, 1, 3)
    assert cone.dim == 3
    assert isinstance(cone.data, PositiveHullData)
    with pytest.raises(InvalidPairError):
        internal_cone(Family.SIMPLEX, 4, 3, 1)
    with pytest.raises(InvalidFaceError):
        internal_cone(Family.CROSSPOLYTOPE, 3, 0, 3)


def test_cone_validation():
    bad_frame = np.array([[1.0, 0.0], [1.0, 1.0]])
    with pytest.raises(NumericError):
        Cone(bad_frame, PositiveHullData(np.eye(2)))
    frame = np.array([[1.0, 0.0, 0.0]])
    outside = PositiveHullData(np.array([[0.0, 1.0, 0.0]]))
    with pytest.raises(NumericError):
        Cone(frame, outside)


# ---------------------------------------------------------------------------
# exact branches


@pytest.mark.parametrize("n,g", [(3, 0), (4, 2), (5, 4)])
def test_external_angle_cube_exact(n, g):
    est = external_angle(Family.CUBE, n, g)
    assert est.method == "exact"
    assert est.exact_value == Fraction(1, 2 ** (n - g))
    assert est.std_error == 0.0


@pytest.mark.parametrize("family", list(Family))
def test_external_angle_trivial_faces(family):
    hi = 4
    assert external_angle(family, hi, hi).exact_value == 1
    assert external_angle(family, hi, hi - 1).exact_value == Fraction(1, 2)


@pytest.mark.parametrize("family", list(Family))
def test_internal_angle_exact_branches(family):
    assert internal_angle(family, 4, 3, 1).exact_value == 0
    assert internal_angle(family, 4, 2, 2).exact_value == 1
    assert internal_angle(family, 4, 1, 2).exact_value == Fraction(1, 2)


def test_internal_angle_cube_exact():
    assert internal_angle(Family.CUBE, 5, 1, 4).exact_value == Fraction(1, 8)


def test_angle_argument_validation():
    with pytest.raises(InvalidFaceError):
        external_angle(Family.SIMPLEX, 3, 4)
    with pytest.raises(InvalidFaceError):
        external_angle(Family.SIMPLEX, 3, -1)
    with pytest.raises(InvalidFaceError):
        internal_angle(Family.CROSSPOLYTOPE, 3, 0, 3)  # no canonical 3-face
    with pytest.raises(InvalidArgumentError):
        internal_angle(Family.SIMPLEX, 3, -1, 2)
    with pytest.raises(InvalidArgumentError):
        external_angle(Family.SIMPLEX, True, 0)


def test_angle_estimate_validation():
    with pytest.raises(NumericError):
        AngleEstimate(1.5, 0.0, "exact", 0)
    with pytest.raises(NumericError):
        AngleEstimate(0.5, 0.1, "exact", 0)


# ---------------------------------------------------------------------------
# Monte Carlo vs exact and vs quadrature


def test_normal_cone_sampler_matches_cube_exact():
    # the cube branch never samples, so drive the sampler directly
    cfg = MCConfig(samples=200_000, seed=0)
    est = cone_angle(normal_cone(Family.CUBE, 3, 0), cfg)
    assert est.method == "monte_carlo"
    assert abs(est.value - 0.125) < 4 * est.std_error + 1e-12


def test_positive_hull_sampler_matches_cube_exact():
    cfg = MCConfig(samples=10_000, seed=0)
    est = cone_angle(internal_cone(Family.CUBE, 3, 0, 2), cfg)
    assert abs(est.value - 0.25) < 4 * est.std_error + 1e-12


@pytest.mark.parametrize("n,g", [(4, 0), (5, 1)])
def test_simplex_external_matches_quadrature(n, g):
    cfg = MCConfig(samples=200_000, seed=0)
    est = external_angle(Family.SIMPLEX, n, g, cfg)
    assert abs(est.value - simplex_external_quadrature(n, g)) < 4 * est.std_error


@pytest.mark.parametrize("n,g", [(3, 0), (4, 1)])
def test_cross_external_matches_quadrature(n, g):
    cfg = MCConfig(samples=200_000, seed=0)
    est = external_angle(Family.CROSSPOLYTOPE, n, g, cfg)
    assert abs(est.value - cross_external_quadrature(n, g)) < 4 * est.std_error


def test_internal_angle_triangle_vertex():
    est = internal_angle(Family.SIMPLEX, 3, 0, 2, FAST)
    assert abs(est.value - TRIANGLE_VERTEX_ANGLE) < 4 * est.std_error


def test_internal_angle_tetra_edge():
    est = internal_angle(Family.SIMPLEX, 4, 1, 3, FAST)
    assert abs(est.value - TETRA_EDGE_ANGLE) < 4 * est.std_error


def test_internal_shared_between_simplex_and_cross():
    a = internal_angle(Family.SIMPLEX, 5, 0, 2, FAST)
    b = internal_angle(Family.CROSSPOLYTOPE, 6, 0, 2, FAST)
    assert a == b  # identical canonical geometry, identical memo entry


def test_internal_angle_independent_of_n():
    # the same face pair inside a bigger polytope spans the same cone
    cfg = MCConfig(samples=10_000, seed=0)
    big = cone_angle(internal_cone(Family.SIMPLEX, 7, 0, 2), cfg)
    shared = internal_angle(Family.SIMPLEX, 3, 0, 2, cfg)
    assert abs(big.value - shared.value) < 4 * (big.std_error + shared.std_error)


def test_nnls_membership_matches_hrep_oracle():
    k, g = 0, 3
    cone = internal_cone(Family.SIMPLEX, g, k, g)
    rng = derive_generator(99, 7)
    u = rng.standard_normal((2000, cone.dim)) @ cone.frame
    a = cone.data.generators.T
    for row in u:
        _, resid = robust_nnls(a, row)
        nnls_in = resid <= 1e-8 * (1 + np.linalg.norm(row))
        assert nnls_in == internal_hrep_member(row, k, g)


# ---------------------------------------------------------------------------
# determinism, memoization, caching


def test_cone_angle_deterministic():
    cfg = MCConfig(samples=30_000, seed=5)
    cone = normal_cone(Family.SIMPLEX, 4, 0)
    a = cone_angle(cone, cfg)
    b = cone_angle(cone, cfg)
    assert a == b


def test_cone_angle_worker_invariant():
    cone = normal_cone(Family.CROSSPOLYTOPE, 4, 0)
    a = cone_angle(cone, MCConfig(samples=50_000, seed=2, workers=1))
    b = cone_angle(cone, MCConfig(samples=50_000, seed=2, workers=3))
    assert a.value == b.value


def test_cone_angle_seed_sensitivity():
    cone = normal_cone(Family.SIMPLEX, 4, 0)
    a = cone_angle(cone, MCConfig(samples=30_000, seed=0))
    b = cone_angle(cone, MCConfig(samples=30_000, seed=1))
    assert a.value != b.value


def test_zero_dimensional_cone_is_exact():
    cone = Cone(np.zeros((0, 3)), PositiveHullData(np.zeros((0, 3))))
    est = cone_angle(cone)
    assert est.exact_value == 1


def test_memo_returns_same_estimate():
    clear_angle_memo()
    cfg = MCConfig(samples=5_000, seed=9)
    a = external_angle(Family.SIMPLEX, 4, 0, cfg)
    b = external_angle(Family.SIMPLEX, 4, 0, cfg)
    assert a is b or a == b


def test_cache_file_roundtrip(tmp_path):
    clear_angle_memo()
    path = str(tmp_path / "angles.cache")
    cfg = MCConfig(samples=5_000, seed=9, cache_path=path)
    est = external_angle(Family.SIMPLEX, 4, 0, cfg)
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    assert len(lines) == 1
    assert lines[0].split()[:7] == ["simplex", "4", "-1", "0", "ext", "5000", "9"]
    clear_angle_memo()
    again = external_angle(Family.SIMPLEX, 4, 0, cfg)
    assert again.value == est.value
    clear_angle_memo()


def test_cache_file_is_trusted(tmp_path):
    # a preloaded row short-circuits sampling entirely
    clear_angle_memo()
    path = tmp_path / "angles.cache"
    path.write_text("simplex 4 -1 0 ext 777 3 0.123 0.001\n", encoding="utf-8")
    cfg = MCConfig(samples=777, seed=3, cache_path=str(path))
    est = external_angle(Family.SIMPLEX, 4, 0, cfg)
    assert est.value == 0.123
    clear_angle_memo()


def test_mcconfig_validation():
    with pytest.raises(InvalidArgumentError):
        MCConfig(samples=0)
    with pytest.raises(InvalidArgumentError):
        MCConfig(seed=-1)
    with pytest.raises(InvalidArgumentError):
        MCConfig(workers=0)
    with pytest.raises(InvalidArgumentError):
        MCConfig(chunk_size=0)


def test_stream_helpers():
    assert chunk_counts(70_000, 1 << 15) == [32768, 32768, 4464]
    assert sum(chunk_counts(123, 7)) == 123
    with pytest.raises(ValueError):
        derive_generator(3, -1)
    a = derive_generator(3, 1, 2).standard_normal(4)
    b = derive_generator(3, 1, 2).standard_normal(4)
    assert np.array_equal(a, b)
