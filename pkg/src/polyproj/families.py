"""The three regular polytope series: simplex, crosspolytope, cube.

Coordinates follow the standard embeddings

    simplex        P_n = conv(e_1, ..., e_{n+1})        in R^{n+1}
    crosspolytope  P_n = conv(+-e_1, ..., +-e_n)        in R^n
    cube           P_n = conv({0,1}^n)                  in R^n

All vertex arrays are integer-valued and deterministic in order.  Canonical
faces Q_{i,n} are the representative i-dimensional faces used throughout:
conv(e_1, ..., e_{i+1}) for simplex and crosspolytope, and the coordinate
subcube spanned by the first i coordinates for the cube.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidArgumentError, InvalidDimensionError, InvalidFaceError


class Family(str, Enum):
    SIMPLEX = "simplex"
    CROSSPOLYTOPE = "crosspolytope"
    CUBE = "cube"


_MAX_CUBE_N = 15  # vertex arrays grow as 2^n; keep explicit desk-scale cap


def ambient_dim(family: Family, n: int) -> int:
    """Dimension of the ambient space the standard embedding lives in."""
    _check_n(family, n)
    return n + 1 if family is Family.SIMPLEX else n


def _check_n(family: Family, n: int) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InvalidArgumentError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise InvalidDimensionError(f"polytope dimension must be >= 1, got {n}")
    if family is Family.CUBE and n > _MAX_CUBE_N:
        raise InvalidDimensionError(
            f"cube vertex enumeration capped at n = {_MAX_CUBE_N}, got {n}"
        )


def vertices(family: Family, n: int) -> np.ndarray:
    """All vertices of P_n as an integer array, one vertex per row."""
    _check_n(family, n)
    if family is Family.SIMPLEX:
        return np.eye(n + 1, dtype=np.int64)
    if family is Family.CROSSPOLYTOPE:
        eye = np.eye(n, dtype=np.int64)
        return np.vstack([eye, -eye])
    # cube: vertex i has coordinate j equal to bit j of i
    idx = np.arange(2**n, dtype=np.int64)
    return (idx[:, None] >> np.arange(n)) & 1


def face_count(family: Family, m: int, ell: int, on_polytope: bool = True) -> int:
    """Number of ell-dimensional faces of an m-dimensional face of the series.

    `on_polytope=True` counts faces of the polytope P_m itself; False counts
    faces of a proper m-face of some larger P_n.  The flag only matters for the
    crosspolytope, whose proper faces are simplices rather than smaller
    crosspolytopes.  The face itself counts as its own (improper) face, so
    face_count(f, m, m) == 1.
    """
    for name, v in (("m", m), ("ell", ell)):
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
            raise InvalidArgumentError(f"{name} must be an integer, got {v!r}")
    if m < 0 or ell < 0:
        raise InvalidArgumentError(f"face dimensions must be >= 0, got m={m}, ell={ell}")
    if ell > m:
        return 0
    if ell == m:
        return 1
    if family is Family.SIMPLEX:
        return math.comb(m + 1, ell + 1)
    if family is Family.CUBE:
        return 2 ** (m - ell) * math.comb(m, ell)
    if on_polytope:
        return 2 ** (ell + 1) * math.comb(m, ell + 1)
    return math.comb(m + 1, ell + 1)


@dataclass(frozen=True)
class CanonicalFace:
    """The representative face Q_{i,n}: family, dimensions, and its vertex rows."""

    family: Family
    n: int
    dim: int
    vertices: np.ndarray

    def __post_init__(self):
        self.vertices.setflags(write=False)


def canonical_face(family: Family, n: int, i: int) -> CanonicalFace:
    """Q_{i,n}, the canonical i-face of P_n.

    For the simplex, i ranges over 0..n (i = n is P_n itself).  For the
    crosspolytope only proper faces exist canonically, so 0 <= i <= n-1.
    For the cube, 0 <= i <= n.
    """
    _check_n(family, n)
    if not isinstance(i, (int, np.integer)) or isinstance(i, bool):
        raise InvalidArgumentError(f"face dimension must be an integer, got {i!r}")
    hi = n - 1 if family is Family.CROSSPOLYTOPE else n
    if i < 0 or i > hi:
        raise InvalidFaceError(
            f"no canonical {i}-face of the {family.value} P_{n} (valid range 0..{hi})"
        )
    if family is Family.CUBE:
        idx = np.arange(2**i, dtype=np.int64)
        verts = np.zeros((2**i, n), dtype=np.int64)
        if i > 0:
            verts[:, :i] = (idx[:, None] >> np.arange(i)) & 1
    else:
        d = ambient_dim(family, n)
        verts = np.eye(d, dtype=np.int64)[: i + 1]
    return CanonicalFace(family, n, i, verts)


def face_volume(face: CanonicalFace) -> float:
    """k-dimensional volume of Q_{k,n}.

    Simplex-type faces (simplex and crosspolytope families) are regular
    simplices with edge length sqrt(2): Vol_k = sqrt(k+1)/k!.  Cube faces are
    unit subcubes, volume 1.  Zero-dimensional volume is 1 by convention.
    """
    k = face.dim
    if k == 0 or face.family is Family.CUBE:
        return 1.0
    return math.sqrt(k + 1) / math.factorial(k)


def barycenter(face: CanonicalFace) -> np.ndarray:
    return face.vertices.mean(axis=0)
