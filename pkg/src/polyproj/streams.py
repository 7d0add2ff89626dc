"""Deterministic random-stream derivation.

Every Monte Carlo consumer in the package draws from a Philox generator seeded
by a SeedSequence over an explicit integer tuple

    (master_seed, purpose, *identity, chunk)

so that results are reproducible bit-for-bit, independent of evaluation order
and worker count.  Purpose and identity codes are fixed integer maps below;
Python's salted hash() is never used.
"""

from __future__ import annotations

from numpy.random import Generator, Philox, SeedSequence

# purpose codes
ANGLE_SAMPLES = 1
SIM_REPLICATION = 2

# angle kind codes
KIND_INTERNAL = 1
KIND_EXTERNAL = 2

# family codes (align with families.Family order)
FAMILY_CODES = {"simplex": 1, "crosspolytope": 2, "cube": 3}

# simulation model codes
MODEL_CODES = {
    "gaussian": 1,
    "symmetric": 2,
    "zonotope": 3,
    "projected_simplex": 4,
    "projected_crosspolytope": 5,
    "projected_cube": 6,
}


def derive_generator(master_seed: int, *path: int) -> Generator:
    """Philox generator for the stream identified by (master_seed, *path).

    All path entries must be nonnegative integers; SeedSequence rejects
    negatives, which keeps sentinel conventions honest.
    """
    entropy = (int(master_seed),) + tuple(int(p) for p in path)
    if any(p < 0 for p in entropy):
        raise ValueError(f"seed path entries must be nonnegative, got {entropy}")
    return Generator(Philox(SeedSequence(entropy)))


def chunk_counts(total: int, chunk_size: int) -> list[int]:
    """Split `total` samples into a fixed chunk grid.

    The grid depends only on (total, chunk_size), never on worker count, so a
    chunked estimate is invariant under parallelism.
    """
    if total < 0 or chunk_size <= 0:
        raise ValueError("total must be >= 0 and chunk_size positive")
    full, rem = divmod(total, chunk_size)
    counts = [chunk_size] * full
    if rem:
        counts.append(rem)
    return counts
