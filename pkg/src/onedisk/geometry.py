"""Planar lattices: canonical bases, radii, Voronoi cells, neighbor enumeration.

A lattice is the set of integer combinations of two independent vectors
``a`` and ``b``.  Everything downstream works on a canonical *reduced*
basis in which ``a`` and ``b`` are the two shortest independent lattice
vectors, the triangle ``0, a, b`` is non-obtuse, and ``c = a - b`` is the
longest of the three edges.  In that form the packing radius is
``|a| / 2`` and the covering radius is the circumradius of the triangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateBasisError, DomainError

# Relative tolerance for exact-geometry comparisons (double precision).
REL_TOL = 1e-12


@dataclass(frozen=True)
class Vec2:
    """Immutable point/vector in the plane. Components must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite vector component: ({self.x}, {self.y})")

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def angle(self) -> float:
        """Angle from the positive x-axis, in [0, 2*pi)."""
        t = math.atan2(self.y, self.x)
        return t if t >= 0.0 else t + 2.0 * math.pi


@dataclass(frozen=True)
class LatticeBasis:
    """An arbitrary (not necessarily reduced) pair of lattice generators."""

    a: Vec2
    b: Vec2

    def __post_init__(self) -> None:
        if abs(self.a.cross(self.b)) <= REL_TOL * self.a.norm() * self.b.norm():
            raise DegenerateBasisError(
                f"basis vectors are numerically dependent: {self.a}, {self.b}"
            )


@dataclass(frozen=True)
class ReducedBasis:
    """Canonical non-obtuse generators with |a| <= |b| <= |c|, c = a - b.

    ``gamma`` is the angle between ``a`` and ``b`` in (0, pi/2].
    """

    a: Vec2
    b: Vec2
    c: Vec2
    len_a: float
    len_b: float
    len_c: float
    gamma: float

    def scaled(self, s: float) -> "ReducedBasis":
        """The same lattice shape scaled by a positive factor."""
        if not (math.isfinite(s) and s > 0.0):
            raise DomainError(f"scale factor must be positive and finite, got {s}")
        return ReducedBasis(
            self.a * s, self.b * s, self.c * s,
            self.len_a * s, self.len_b * s, self.len_c * s, self.gamma,
        )


@dataclass(frozen=True)
class RadiiProfile:
    r_pack: float
    r_cover: float


@dataclass(frozen=True)
class VoronoiCell:
    """Voronoi cell of the origin: 4 or 6 vertices, counterclockwise."""

    vertices: tuple[Vec2, ...]


def _from_pair(a: Vec2, b: Vec2) -> ReducedBasis:
    c = a - b
    # atan2 of (|cross|, dot) is accurate for angles near both 0 and pi/2.
    gamma = math.atan2(abs(a.cross(b)), a.dot(b))
    return ReducedBasis(a, b, c, a.norm(), b.norm(), c.norm(), gamma)


def reduce_basis(basis: LatticeBasis) -> ReducedBasis:
    """Reduce an arbitrary basis to the canonical non-obtuse form.

    Lagrange reduction (repeatedly subtract the rounded projection and
    swap) yields the two shortest independent vectors; the canonical
    representative is then chosen among all sign/recombination variants
    that keep the length ordering and a non-obtuse angle, preferring
    positive orientation and then the smallest angles from the x-axis.
    """
    u, v = basis.a, basis.b
    if u.norm() > v.norm():
        u, v = v, u
    for _ in range(64):
        mu = round(u.dot(v) / u.dot(u))
        v = v - mu * u
        if v.norm() < u.norm():
            u, v = v, u
        else:
            break

    det_abs = abs(u.cross(v))
    scale = u.norm()
    candidates: list[tuple[tuple[int, float, float], Vec2, Vec2]] = []
    span = (-1, 0, 1)
    combos = [(i, j) for i in span for j in span if (i, j) != (0, 0)]
    for ia, ja in combos:
        pa = Vec2(ia * u.x + ja * v.x, ia * u.y + ja * v.y)
        for ib, jb in combos:
            if abs(ia * jb - ja * ib) != 1:  # must stay unimodular
                continue
            pb = Vec2(ib * u.x + jb * v.x, ib * u.y + jb * v.y)
            na, nb, nc = pa.norm(), pb.norm(), (pa - pb).norm()
            if na > nb * (1.0 + REL_TOL) or nb > nc * (1.0 + REL_TOL):
                continue
            if pa.dot(pb) < -REL_TOL * na * nb:
                continue
            det = pa.cross(pb)
            key = (0 if det > 0.0 else 1, pa.angle(), pb.angle())
            candidates.append((key, pa, pb))
    if not candidates:
        raise DegenerateBasisError(f"no reduced representative found for {basis}")
    _, a, b = min(candidates, key=lambda t: t[0])
    rb = _from_pair(a, b)
    # Guard against numerical corruption of the reduction itself.
    assert abs(abs(a.cross(b)) - det_abs) <= 1e-9 * max(det_abs, scale * scale)
    return rb


def lattice_from_params(t: float, gamma: float) -> ReducedBasis:
    """Reduced basis for the normalized lattice with |a| = t, |b| = 1.

    The feasible domain is 0 < t <= 1 and arccos(t/2) <= gamma <= pi/2;
    boundary values are accepted with a small tolerance and snapped in.
    """
    if not (math.isfinite(t) and math.isfinite(gamma)):
        raise DomainError(f"non-finite lattice parameters ({t}, {gamma})")
    if not (0.0 < t <= 1.0 + REL_TOL):
        raise DomainError(f"t must be in (0, 1], got {t}")
    t = min(t, 1.0)
    gamma_lo = math.acos(t / 2.0)
    gamma_hi = math.pi / 2.0
    if not (gamma_lo - 1e-9 <= gamma <= gamma_hi + 1e-9):
        raise DomainError(
            f"gamma={gamma} outside [arccos(t/2), pi/2] = [{gamma_lo}, {gamma_hi}]"
        )
    gamma = min(max(gamma, gamma_lo), gamma_hi)
    a = Vec2(t, 0.0)
    b = Vec2(math.cos(gamma), math.sin(gamma))
    rb = _from_pair(a, b)
    # _from_pair recomputes gamma from the vectors; keep the requested value.
    return ReducedBasis(rb.a, rb.b, rb.c, rb.len_a, rb.len_b, rb.len_c, gamma)


def det_lattice(rb: ReducedBasis) -> float:
    """Area of the fundamental domain, |a||b| sin(gamma)."""
    return rb.len_a * rb.len_b * math.sin(rb.gamma)


def radii(rb: ReducedBasis) -> RadiiProfile:
    """Packing radius |a|/2 and covering radius (triangle circumradius)."""
    r_pack = rb.len_a / 2.0
    # circumradius = product of sides / (4 * triangle area), area = det/2
    r_cover = rb.len_a * rb.len_b * rb.len_c / (2.0 * det_lattice(rb))
    return RadiiProfile(r_pack, r_cover)


def _circumcenter(p: Vec2, q: Vec2) -> Vec2:
    """Circumcenter of the triangle (0, p, q)."""
    d = 2.0 * p.cross(q)
    p2 = p.dot(p)
    q2 = q.dot(q)
    return Vec2((p2 * q.y - q2 * p.y) / d, (q2 * p.x - p2 * q.x) / d)


def voronoi_cell(rb: ReducedBasis) -> VoronoiCell:
    """Voronoi cell of the origin: a hexagon, or a rectangle at gamma = pi/2."""
    a, b = rb.a, rb.b
    if abs(a.dot(b)) <= 1e-14 * rb.len_a * rb.len_b:
        corners = [(a + b) * 0.5, (b - a) * 0.5, -(a + b) * 0.5, (a - b) * 0.5]
        corners.sort(key=Vec2.angle)
        return VoronoiCell(tuple(corners))
    c = rb.c
    ring = sorted([a, b, -c, -a, -b, c], key=Vec2.angle)
    verts = [_circumcenter(ring[k], ring[(k + 1) % 6]) for k in range(6)]
    verts.sort(key=Vec2.angle)
    return VoronoiCell(tuple(verts))


def neighbors_within(rb: ReducedBasis, dist: float) -> list[Vec2]:
    """All nonzero lattice points with norm <= dist, sorted by (norm, angle).

    Index bounds come from the dual basis, so the enumeration is complete
    for any radius.
    """
    if not (math.isfinite(dist) and dist >= 0.0):
        raise DomainError(f"dist must be nonnegative and finite, got {dist}")
    det = abs(rb.a.cross(rb.b))
    imax = int(dist * rb.len_b / det) + 1
    jmax = int(dist * rb.len_a / det) + 1
    cutoff = dist * (1.0 + REL_TOL)
    out: list[Vec2] = []
    for i in range(-imax, imax + 1):
        for j in range(-jmax, jmax + 1):
            if i == 0 and j == 0:
                continue
            p = Vec2(i * rb.a.x + j * rb.b.x, i * rb.a.y + j * rb.b.y)
            if p.norm() <= cutoff:
                out.append(p)
    out.sort(key=lambda p: (p.norm(), p.angle()))
    return out
