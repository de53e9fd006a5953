"""Sampling and quadrature oracles, independent of the analytic formulas.

Points are drawn uniformly in the fundamental parallelogram (two uniform
coordinates); by periodicity this is equivalent to sampling the plane.
Coverage is counted exactly against every lattice disk that can reach the
parallelogram, with no use of the three-neighbor-pair assumption, which is
what makes these estimates a genuine cross-check.

Reproducibility: the stream is Philox 4x64-10 (numpy's ``Philox`` bit
generator).  Sample index space is split into fixed chunks of 2**20; chunk
``k`` uses ``SeedSequence(seed, spawn_key=(k,))``, and per-chunk hit counts
are integers, so results are bit-identical regardless of how chunks would
be distributed over workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import ReducedBasis, det_lattice, neighbors_within

CHUNK = 1 << 20
GENERATOR_NAME = "Philox4x64-10 (numpy Philox, SeedSequence(seed, spawn_key=(chunk,)))"


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_error: float
    n_samples: int
    seed: int


def _check_mc_args(rho: float, n: int, seed: int) -> None:
    if not (math.isfinite(rho) and rho > 0.0):
        raise DomainError(f"rho must be positive, got {rho}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (0 <= seed < 2**64):
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")


def _disk_centers(rb: ReducedBasis, rho: float) -> np.ndarray:
    """Origin plus every lattice point whose disk can reach the parallelogram."""
    reach = rb.len_a + rb.len_b + rho  # sup |x| over the domain is |a + b|
    pts = neighbors_within(rb, reach)
    arr = np.empty((len(pts) + 1, 2))
    arr[0] = (0.0, 0.0)
    for k, p in enumerate(pts):
        arr[k + 1] = (p.x, p.y)
    return arr


def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(chunk_index,))
    return np.random.Generator(np.random.Philox(ss))


def _cover_counts(x: np.ndarray, y: np.ndarray, centers: np.ndarray, rho: float) -> np.ndarray:
    r2 = rho * rho
    counts = np.zeros(x.shape, dtype=np.int32)
    for cx, cy in centers:
        # closed disks: boundary ties count as covered
        counts += (x - cx) ** 2 + (y - cy) ** 2 <= r2
    return counts


def mc_exactly_one(rb: ReducedBasis, rho: float, n: int, seed: int) -> McEstimate:
    """Fraction of random points covered by exactly one disk of radius rho."""
    _check_mc_args(rho, n, seed)
    centers = _disk_centers(rb, rho)
    hits = 0
    done = 0
    chunk_index = 0
    while done < n:
        m = min(CHUNK, n - done)
        u = _chunk_rng(seed, chunk_index).random((m, 2))
        x = u[:, 0] * rb.a.x + u[:, 1] * rb.b.x
        y = u[:, 0] * rb.a.y + u[:, 1] * rb.b.y
        hits += int(np.count_nonzero(_cover_counts(x, y, centers, rho) == 1))
        done += m
        chunk_index += 1
    mean = hits / n
    return McEstimate(mean, math.sqrt(mean * (1.0 - mean) / n), n, seed)


def mc_cover_count(rb: ReducedBasis, rho: float, n: int, seed: int) -> McEstimate:
    """Average number of disks covering a random point (density estimate)."""
    _check_mc_args(rho, n, seed)
    centers = _disk_centers(rb, rho)
    total = 0
    total_sq = 0
    done = 0
    chunk_index = 0
    while done < n:
        m = min(CHUNK, n - done)
        u = _chunk_rng(seed, chunk_index).random((m, 2))
        x = u[:, 0] * rb.a.x + u[:, 1] * rb.b.x
        y = u[:, 0] * rb.a.y + u[:, 1] * rb.b.y
        counts = _cover_counts(x, y, centers, rho).astype(np.int64)
        total += int(counts.sum())
        total_sq += int((counts * counts).sum())
        done += m
        chunk_index += 1
    mean = total / n
    if n > 1:
        var = (total_sq - n * mean * mean) / (n - 1)
        se = math.sqrt(max(var, 0.0) / n)
    else:
        se = 0.0
    return McEstimate(mean, se, n, seed)


def grid_area_exactly_one(rb: ReducedBasis, rho: float, resolution: int) -> float:
    """Deterministic midpoint-rule estimate of the exactly-one area.

    A resolution x resolution affine grid of parallelogram midpoints is
    classified exactly; the result is det * hits / resolution^2.
    """
    if resolution < 16:
        raise DomainError(f"resolution must be >= 16, got {resolution}")
    if not (math.isfinite(rho) and rho > 0.0):
        raise DomainError(f"rho must be positive, got {rho}")
    centers = _disk_centers(rb, rho)
    alphas = (np.arange(resolution) + 0.5) / resolution
    hits = 0
    block = max(1, CHUNK // resolution)
    for row0 in range(0, resolution, block):
        betas = alphas[row0 : row0 + block]
        x = alphas[None, :] * rb.a.x + betas[:, None] * rb.b.x
        y = alphas[None, :] * rb.a.y + betas[:, None] * rb.b.y
        hits += int(np.count_nonzero(_cover_counts(x, y, centers, rho) == 1))
    return det_lattice(rb) * hits / (resolution * resolution)
