"""Expected face numbers of random projections and Gaussian random polytopes.

The central quantity is E f_k of the image of P_n under a uniform random
orthogonal projection to R^d.  For d <= n it equals

    2 * sum over j = d, d-2, d-4, ..., j >= 1 of
        c(n, j-1) * c(j-1, k) * beta(Q_k, Q_{j-1}) * gamma(Q_{j-1}, P_n)

with face counts c from the family's combinatorics, internal angles beta and
external angles gamma from the angle engine.  For d > n the projection is
injective almost surely and f_k is deterministic.  Whenever every factor in
the sum is exact the result is carried as an exact rational; cubes always
take this path, which is what makes their monotonicity verdicts exact.

Three Gaussian models reduce to the three series: the convex hull of n iid
standard Gaussian points behaves like a projected (n-1)-simplex, the hull of
n symmetrized pairs like a projected n-crosspolytope, and the zonotope
sum of n random segments like a projected n-cube.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .angles import AngleEstimate, MCConfig, external_angle, internal_angle
from .errors import InvalidArgumentError, InvalidDimensionError, TruncationError
from .families import Family, canonical_face, face_count, face_volume
from .streams import MODEL_CODES

GAUSSIAN_MODELS = ("gaussian", "symmetric", "zonotope")


@dataclass(frozen=True)
class Estimate:
    """A value with its uncertainty; exact results carry std_error 0.

    exact_value holds the rational value when one exists (cube sums, trivial
    branches); exact results with irrational values (simplex volumes) keep
    exact=True with exact_value=None.
    """

    value: float
    std_error: float = 0.0
    exact: bool = False
    exact_value: Fraction | int | None = None

    @property
    def method(self) -> str:
        return "exact" if self.exact else "monte_carlo"


def _exact_estimate(v) -> Estimate:
    return Estimate(float(v), 0.0, True, Fraction(v))


@dataclass(frozen=True)
class SnTerm:
    """One j-term of the projection sum, with its factors kept visible."""

    j: int
    faces: int  # c(n, j-1)
    subfaces: int  # c(j-1, k)
    beta: AngleEstimate
    gamma: AngleEstimate
    value: float
    std_error: float
    exact_value: Fraction | None


def _check_int(name: str, v, lo: int | None = None) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidArgumentError(f"{name} must be an integer, got {v!r}")
    if lo is not None and v < lo:
        raise InvalidArgumentError(f"{name} must be >= {lo}, got {v}")
    return v


def sn_terms(
    family: Family, n: int, d: int, k: int, cfg: MCConfig | None = None
) -> list[SnTerm]:
    """The terms of the projection sum for E f_k, j descending from d by 2.

    Terms with k > j-1 vanish (the subface count is 0) and are included with
    value 0 so the sum structure stays inspectable.
    """
    family = Family(family)
    n = _check_int("n", n, 1)
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    if d > n:
        raise InvalidArgumentError(f"projection sum needs d <= n, got d={d} > n={n}")
    cfg = cfg or MCConfig()
    terms: list[SnTerm] = []
    j = d
    while j >= 1:
        c1 = face_count(family, n, j - 1, on_polytope=True)
        c2 = face_count(family, j - 1, k, on_polytope=False)
        beta = internal_angle(family, n, k, j - 1, cfg)
        gamma = external_angle(family, n, j - 1, cfg)
        value = c1 * c2 * beta.value * gamma.value
        se = c1 * c2 * math.hypot(beta.value * gamma.std_error, gamma.value * beta.std_error)
        exact = None
        if beta.exact_value is not None and gamma.exact_value is not None:
            exact = c1 * c2 * beta.exact_value * gamma.exact_value
        terms.append(SnTerm(j, c1, c2, beta, gamma, value, se, exact))
        j -= 2
    return terms


def expected_f_projection(
    family: Family, n: int, d: int, k: int, cfg: MCConfig | None = None
) -> Estimate:
    """E f_k of the random projection of P_n to d dimensions.

    Deterministic branches: k beyond min(n, d) gives 0; k = min(n, d) gives 1
    (the image itself); d > n gives the face count of P_n (injective); d = 1
    gives the segment counts (2, 1).  The general branch evaluates the
    projection sum, exactly where possible.
    """
    family = Family(family)
    n = _check_int("n", n, 1)
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    m = min(n, d)
    if k > m:
        return _exact_estimate(0)
    if k == m:
        return _exact_estimate(1)
    if d > n:
        return _exact_estimate(face_count(family, n, k, on_polytope=True))
    if d == 1:
        # the image is a segment for every draw; only k = 0 reaches here
        return _exact_estimate(2)
    terms = sn_terms(family, n, d, k, cfg)
    value = 2.0 * sum(t.value for t in terms)
    se = 2.0 * sum(t.std_error for t in terms)
    if all(t.exact_value is not None for t in terms):
        total = 2 * sum(t.exact_value for t in terms)
        return Estimate(float(total), 0.0, True, total)
    return Estimate(value, se, False, None)


def expected_f_cube_closed_form(n: int, d: int, k: int) -> int:
    """E f_k of a projected cube, as an integer, by the collapsed sum.

    Cube internal and external angles are powers of 1/2 that cancel against
    the 2-power in the face counts, leaving 2 * sum_j C(n, j-1) * C(j-1, k).
    Requires 1 <= d <= n and 0 <= k < d.
    """
    n = _check_int("n", n, 1)
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    if d > n:
        raise InvalidArgumentError(f"closed form needs d <= n, got d={d} > n={n}")
    if k >= d:
        raise InvalidArgumentError(f"closed form needs k < d, got k={k}, d={d}")
    total = 0
    j = d
    while j >= 1:
        total += math.comb(n, j - 1) * math.comb(j - 1, k)
        j -= 2
    return 2 * total


def expected_f_gaussian(n: int, d: int, k: int, cfg: MCConfig | None = None) -> Estimate:
    """E f_k of the convex hull of n iid standard Gaussian points in R^d."""
    n = _check_int("n", n, 1)
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    if n == 1:
        return _exact_estimate(1 if k == 0 else 0)
    return expected_f_projection(Family.SIMPLEX, n - 1, d, k, cfg)


def expected_f_symmetric(n: int, d: int, k: int, cfg: MCConfig | None = None) -> Estimate:
    """E f_k of the convex hull of n iid Gaussian points and their negatives."""
    n = _check_int("n", n, 1)
    return expected_f_projection(Family.CROSSPOLYTOPE, n, d, k, cfg)


def expected_f_zonotope(n: int, d: int, k: int) -> Estimate:
    """E f_k of the Minkowski sum of n segments with iid Gaussian directions in R^d.

    Always exact: the projected-cube closed form for d <= n, cube face counts
    for d > n.
    """
    n = _check_int("n", n, 1)
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    m = min(n, d)
    if k > m:
        return _exact_estimate(0)
    if k == m:
        return _exact_estimate(1)
    if d > n:
        return _exact_estimate(face_count(Family.CUBE, n, k, on_polytope=True))
    return _exact_estimate(expected_f_cube_closed_form(n, d, k))


def expected_f_model(model: str, n: int, d: int, k: int, cfg: MCConfig | None = None) -> Estimate:
    """Dispatch E f_k by Gaussian model name; n = 0 points gives the empty hull."""
    if model not in GAUSSIAN_MODELS:
        raise InvalidArgumentError(f"unknown model {model!r}, expected one of {GAUSSIAN_MODELS}")
    n = _check_int("n", n, 0)
    if n == 0:
        return _exact_estimate(0)
    if model == "gaussian":
        return expected_f_gaussian(n, d, k, cfg)
    if model == "symmetric":
        return expected_f_symmetric(n, d, k, cfg)
    return expected_f_zonotope(n, d, k)


@dataclass(frozen=True)
class ExpectedFVector:
    """E f_k for every proper face dimension of one model instance."""

    model: str
    family: Family | None
    n: int
    d: int
    entries: dict[int, Estimate] = field(default_factory=dict)


def expected_f_vector(
    family: Family | None = None,
    model: str | None = None,
    n: int = 0,
    d: int = 0,
    cfg: MCConfig | None = None,
) -> ExpectedFVector:
    """All proper-face expectations of one projection or Gaussian model."""
    if (family is None) == (model is None):
        raise InvalidArgumentError("exactly one of family/model must be given")
    if family is not None:
        family = Family(family)
        top = min(n, d)
        entries = {k: expected_f_projection(family, n, d, k, cfg) for k in range(top)}
        return ExpectedFVector(f"projected_{family.value}", family, n, d, entries)
    top = min(n - 1, d) if model == "gaussian" else min(n, d)
    entries = {k: expected_f_model(model, n, d, k, cfg) for k in range(top)}
    return ExpectedFVector(model, None, n, d, entries)


# ---------------------------------------------------------------------------
# intrinsic volumes and the T-functional scaling

def intrinsic_volume(family: Family, n: int, k: int, cfg: MCConfig | None = None) -> Estimate:
    """V_k(P_n) = c(n, k) * gamma(Q_k, P_n) * Vol_k(Q_k).

    Exact for cubes (binomial coefficients).  The crosspolytope's top volume
    V_n = 2^n/n! is a special branch since it has no canonical n-face.
    """
    family = Family(family)
    n = _check_int("n", n, 1)
    k = _check_int("k", k, 0)
    if k > n:
        raise InvalidArgumentError(f"intrinsic volume needs 0 <= k <= n, got k={k}")
    if family is Family.CROSSPOLYTOPE and k == n:
        return Estimate(2.0**n / math.factorial(n), 0.0, True, Fraction(2**n, math.factorial(n)))
    c = face_count(family, n, k, on_polytope=True)
    gamma = external_angle(family, n, k, cfg)
    vol = face_volume(canonical_face(family, n, k))
    value = c * gamma.value * vol
    se = c * gamma.std_error * vol
    if gamma.exact_value is not None:
        exact_value = c * gamma.exact_value if family is Family.CUBE or k == 0 else None
        return Estimate(value, 0.0, True, exact_value)
    return Estimate(value, se, False, None)


def unit_ball_volume(ell: int) -> float:
    """Volume of the ell-dimensional Euclidean unit ball."""
    ell = _check_int("ell", ell, 0)
    return math.pi ** (ell / 2.0) / math.gamma(ell / 2.0 + 1.0)


def t_functional_expected(d: int, k: int, b: float, expected_f_value: float) -> float:
    """Scale an expected face count into the expected size-functional of k-faces.

    The multiplier is (k+1)^(b/2) / (k!)^b * prod_{j=1..k} of the ratio
    Gamma((d+b+1-j)/2) / Gamma((d+1-j)/2); b = 0 or k = 0 returns the input
    unchanged (the functional degenerates to counting).
    """
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    if not isinstance(b, (int, float)) or isinstance(b, bool):
        raise InvalidArgumentError(f"b must be a real number, got {b!r}")
    if b < 0:
        raise InvalidArgumentError(f"b must be >= 0, got {b}")
    if k > d:
        raise InvalidArgumentError(f"k must be <= d, got k={k}, d={d}")
    if b == 0 or k == 0:
        return expected_f_value
    log_m = b * (0.5 * math.log(k + 1) - math.lgamma(k + 1))
    for j in range(1, k + 1):
        log_m += math.lgamma((d + b + 1 - j) / 2.0) - math.lgamma((d + 1 - j) / 2.0)
    return expected_f_value * math.exp(log_m)


# ---------------------------------------------------------------------------
# Poissonization

@dataclass(frozen=True)
class PoissonizedExpectation:
    value: float
    std_error: float
    truncation_bound: float
    terms: int


_POISSON_MEMO: dict[tuple, Estimate] = {}


def _poisson_term_value(model: str, ell: int, d: int, k: int, cfg: MCConfig) -> Estimate:
    key = (model, d, k, ell, cfg.samples, cfg.seed)
    hit = _POISSON_MEMO.get(key)
    if hit is None:
        hit = expected_f_model(model, ell, d, k, cfg)
        _POISSON_MEMO[key] = hit
    return hit


def _face_bound(model: str, ell: int, d: int, k: int) -> float:
    # upper bounds on f_k given ell points/pairs/segments, used only for tails
    if model == "gaussian":
        return float(math.comb(ell, k + 1))
    if model == "symmetric":
        return float(math.comb(2 * ell, k + 1))
    return expected_f_zonotope(ell, d, k).value


def _growth_ratio(model: str, ell: int, d: int, k: int) -> float:
    # sup over ell' >= ell of bound(ell'+1)/bound(ell'); all three decrease in ell
    if model == "gaussian":
        if ell <= k:
            return float(k + 2)
        return (ell + 1) / (ell - k)
    if model == "symmetric":
        if 2 * ell <= k:
            return float(k + 2)
        return ((2 * ell + 2) * (2 * ell + 1)) / ((2 * ell + 1 - k) * (2 * ell - k))
    if ell + 1 <= d:
        return 2.0 * d
    return (ell + 1) / (ell + 2 - d)


def poissonized_expected(
    t: float,
    d: int,
    k: int,
    model: str = "gaussian",
    eps: float = 1e-8,
    cfg: MCConfig | None = None,
) -> PoissonizedExpectation:
    """E f_k when the number of points is Poisson(t), by adaptive truncation.

    Sums Poisson(t) weights against the fixed-size expectations until the
    remaining tail, bounded through per-model face-count growth bounds, drops
    below eps.  Per-size values are memoized module-wide, so evaluating a grid
    of t values reuses every term.
    """
    if model not in GAUSSIAN_MODELS:
        raise InvalidArgumentError(f"unknown model {model!r}, expected one of {GAUSSIAN_MODELS}")
    if not isinstance(t, (int, float)) or isinstance(t, bool) or t <= 0:
        raise InvalidArgumentError(f"t must be a positive real, got {t!r}")
    if eps <= 0:
        raise InvalidArgumentError(f"eps must be positive, got {eps}")
    d = _check_int("d", d, 1)
    k = _check_int("k", k, 0)
    cfg = cfg or MCConfig()
    t = float(t)
    cap = int(10 * t + 400)
    value = 0.0
    se = 0.0
    ell = 0
    log_t = math.log(t)
    while True:
        weight = math.exp(-t + ell * log_t - math.lgamma(ell + 1))
        term = _poisson_term_value(model, ell, d, k, cfg)
        value += weight * term.value
        se += weight * term.std_error
        if ell >= max(k + 2, int(t) + 1):
            ratio = _growth_ratio(model, ell, d, k)
            q = t * ratio / (ell + 1)
            if q < 0.5:
                tail = weight * _face_bound(model, ell, d, k) * q / (1.0 - q)
                if tail < eps:
                    return PoissonizedExpectation(value, se, tail, ell + 1)
        if ell >= cap:
            bound = weight * _face_bound(model, ell, d, k)
            raise TruncationError(
                f"poissonized sum did not reach eps={eps} within {cap} terms", bound
            )
        ell += 1


# ---------------------------------------------------------------------------
# monotonicity tables

@dataclass(frozen=True)
class MonotonicityRow:
    n: int
    value: float
    std_error: float
    exact: bool
    strict_increase: bool | None  # verdict for the step n -> n+1; None on the last row


def _dispatch_expected(target: str, n: int, d: int, k: int, cfg: MCConfig | None) -> Estimate:
    if target in GAUSSIAN_MODELS:
        return expected_f_model(target, n, d, k, cfg)
    return expected_f_projection(Family(target), n, d, k, cfg)


def monotonicity_table(
    target: str,
    d: int,
    k: int,
    n_lo: int,
    n_hi: int,
    cfg: MCConfig | None = None,
    sigmas: float = 3.0,
) -> list[MonotonicityRow]:
    """E f_k over n = n_lo..n_hi with per-step strict-increase verdicts.

    target is a family name or a Gaussian model name.  Exact neighbors are
    compared as rationals; Monte Carlo neighbors must be separated by
    `sigmas` times the sum of their standard errors to earn a strict verdict.
    """
    targets = GAUSSIAN_MODELS + tuple(f.value for f in Family)
    if target not in targets:
        raise InvalidArgumentError(f"unknown target {target!r}, expected one of {targets}")
    n_lo = _check_int("n_lo", n_lo, 1)
    n_hi = _check_int("n_hi", n_hi, n_lo)
    estimates = [_dispatch_expected(target, n, d, k, cfg) for n in range(n_lo, n_hi + 1)]
    rows: list[MonotonicityRow] = []
    for i, est in enumerate(estimates):
        if i + 1 == len(estimates):
            verdict = None
        else:
            nxt = estimates[i + 1]
            if est.exact and nxt.exact and est.exact_value is not None and nxt.exact_value is not None:
                verdict = nxt.exact_value > est.exact_value
            elif est.exact and nxt.exact:
                verdict = nxt.value > est.value
            else:
                gap = nxt.value - est.value
                verdict = gap > sigmas * (est.std_error + nxt.std_error)
        rows.append(MonotonicityRow(n_lo + i, est.value, est.std_error, est.exact, verdict))
    return rows
