"""Expected f-vectors of random projections of regular polytopes.

Library layout:
  families   vertices, face counts, canonical faces of the three series
  angles     internal/external angles: exact branches + Gaussian Monte Carlo
  expected   projection formula, Gaussian models, intrinsic volumes,
             Poissonization, monotonicity tables
  hull       simulation side: sampled hulls and zonotopes with exact f-vectors
  report     fixed-schema report rows, CSV/JSON
  cli        the `polyproj` command
"""

from .angles import (
    AngleEstimate,
    Cone,
    MCConfig,
    NormalConeData,
    PositiveHullData,
    clear_angle_memo,
    complement_basis,
    cone_angle,
    external_angle,
    internal_angle,
    internal_cone,
    normal_cone,
    orthonormal_basis,
)
from .errors import (
    DegenerateGeometryError,
    InvalidArgumentError,
    InvalidDimensionError,
    InvalidFaceError,
    InvalidPairError,
    NumericError,
    PolyprojError,
    SimulationAbortError,
    TruncationError,
)
from .expected import (
    Estimate,
    ExpectedFVector,
    GAUSSIAN_MODELS,
    MonotonicityRow,
    PoissonizedExpectation,
    SnTerm,
    expected_f_cube_closed_form,
    expected_f_gaussian,
    expected_f_model,
    expected_f_projection,
    expected_f_symmetric,
    expected_f_vector,
    expected_f_zonotope,
    intrinsic_volume,
    monotonicity_table,
    poissonized_expected,
    sn_terms,
    t_functional_expected,
    unit_ball_volume,
)
from .families import (
    CanonicalFace,
    Family,
    ambient_dim,
    barycenter,
    canonical_face,
    face_count,
    face_volume,
    vertices,
)
from .hull import (
    FVectorSample,
    MODELS,
    SimConfig,
    SimulationResult,
    hull_f_vector,
    random_orthonormal_frame,
    sample_gaussian,
    simulate_expected_f,
    symmetrize,
    zonotope_f_vector,
)
from .report import COLUMNS, ReportRow, from_csv, from_json, render, to_csv, to_json

__version__ = "0.1.0"
