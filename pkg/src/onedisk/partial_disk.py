"""The partial disk: the part of B(0, rho) covered by no other lattice disk.

For a reduced basis, only the three antipodal neighbor pairs at distances
|a| <= |b| <= |c| can clip the central disk for radii up to the covering
radius.  Each pair that does removes two congruent circular segments whose
arcs subtend the cut angle ``phi_i = 2 arccos(len_i / (2 rho))``.  The
remaining (convex) part of the circle has total angle
``Phi = 2 pi - 2 (phi1 + phi2 + phi3)``, which decreases monotonically from
2 pi at the packing radius to 0 at the covering radius.  The covered-once
area is maximal at the unique equilibrium radius where Phi = pi, i.e.
``phi1 + phi2 + phi3 = pi/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SolverError
from .geometry import ReducedBasis, det_lattice, radii

# Arcs below this angle are treated as closed for case classification;
# roots at a case boundary carry spurious arcs up to ~2*sqrt(ulp) ~ 4e-8.
_CASE_PHI_TOL = 1e-7

# Slack for accepting rho at the interval endpoints.
_RANGE_TOL = 1e-9


@dataclass(frozen=True)
class ArcAngles:
    """Cut-arc angles at radius rho, ordered phi1 >= phi2 >= phi3 >= 0."""

    rho: float
    phi1: float
    phi2: float
    phi3: float

    def total(self) -> float:
        return self.phi1 + self.phi2 + self.phi3


@dataclass(frozen=True)
class EquilibriumSolution:
    rho_eq: float
    arcs: ArcAngles
    case_index: int
    area: float
    probability: float


def _cut_angle(length: float, rho: float) -> float:
    # 2*acos(length/(2 rho)) computed via atan2 of the exact gap product;
    # this stays fully accurate where the arc barely opens (2 rho ~ length),
    # where the acos form loses half its digits.
    gap = 2.0 * rho - length
    if gap <= 0.0:
        return 0.0
    return 2.0 * math.atan2(math.sqrt(gap * (2.0 * rho + length)), length)


def _check_rho(rb: ReducedBasis, rho: float) -> None:
    rp = rb.len_a / 2.0
    rc = radii(rb).r_cover
    tol = _RANGE_TOL * rc
    if not (rp - tol <= rho <= rc + tol):
        raise DomainError(
            f"rho={rho} outside [r_pack, r_cover] = [{rp}, {rc}]"
        )


def arc_angles(rb: ReducedBasis, rho: float) -> ArcAngles:
    """Cut-arc angles for radius rho in [r_pack, r_cover]."""
    _check_rho(rb, rho)
    return ArcAngles(
        rho,
        _cut_angle(rb.len_a, rho),
        _cut_angle(rb.len_b, rho),
        _cut_angle(rb.len_c, rho),
    )


def convex_total(arcs: ArcAngles) -> float:
    """Total angle of the convex (outer-circle) boundary of the partial disk."""
    return 2.0 * math.pi - 2.0 * arcs.total()


def area_exactly_one(rb: ReducedBasis, rho: float) -> float:
    """Area of the partial disk: rho^2 pi minus twice the cut segments."""
    arcs = arc_angles(rb, rho)
    seg = (
        (arcs.phi1 - math.sin(arcs.phi1))
        + (arcs.phi2 - math.sin(arcs.phi2))
        + (arcs.phi3 - math.sin(arcs.phi3))
    )
    return rho * rho * (math.pi - 2.0 * seg)


def area_derivative(rb: ReducedBasis, rho: float) -> float:
    """d/d(rho) of the partial-disk area: 2 rho (Phi - pi)."""
    return 2.0 * rho * (convex_total(arc_angles(rb, rho)) - math.pi)


def _arc_sum(rb: ReducedBasis, rho: float) -> float:
    return (
        _cut_angle(rb.len_a, rho)
        + _cut_angle(rb.len_b, rho)
        + _cut_angle(rb.len_c, rho)
    )


def equilibrium_radius(rb: ReducedBasis) -> float:
    """The unique radius where the cut-arc angles sum to pi/2.

    Plain bisection: the arc sum is monotone but has square-root kinks at
    len_i / 2 where faster, derivative-based methods stall.  The bracket is
    bisected until it cannot be split further (about 52 iterations), which
    leaves the residual at a few ulps of the radius.
    """
    target = math.pi / 2.0
    lo = rb.len_a / 2.0
    hi = radii(rb).r_cover
    glo = _arc_sum(rb, lo) - target
    ghi = _arc_sum(rb, hi) - target
    if glo > 0.0 or ghi < 0.0:
        raise SolverError(
            f"arc sum does not bracket pi/2 on [{lo}, {hi}]: ({glo}, {ghi})"
        )
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g = _arc_sum(rb, mid) - target
        if g < 0.0:
            lo, glo = mid, g
        else:
            hi, ghi = mid, g
    return lo if abs(glo) <= abs(ghi) else hi


def equilibrium_probability(rb: ReducedBasis) -> EquilibriumSolution:
    """Equilibrium radius, case index, area and exactly-one probability."""
    rho = equilibrium_radius(rb)
    arcs = arc_angles(rb, rho)
    det = det_lattice(rb)
    sin_sum = math.sin(arcs.phi1) + math.sin(arcs.phi2) + math.sin(arcs.phi3)
    area = area_exactly_one(rb, rho)
    area_eq = 2.0 * rho * rho * sin_sum
    # The two paths differ by exactly 2 rho^2 * residual; near a case
    # boundary the square-root kink caps the attainable residual, so that
    # term is budgeted in on top of the 1e-12 agreement check.
    residual = abs(arcs.total() - math.pi / 2.0)
    if abs(area - area_eq) > 1e-12 * max(1.0, area) + 2.5 * rho * rho * residual:
        raise SolverError(
            f"area paths disagree at equilibrium: {area} vs {area_eq}"
        )
    case_index = 1 + (arcs.phi2 > _CASE_PHI_TOL) + (arcs.phi3 > _CASE_PHI_TOL)
    return EquilibriumSolution(rho, arcs, case_index, area, area_eq / det)


def area_profile(
    rb: ReducedBasis, n_points: int
) -> list[tuple[float, float, float]]:
    """(rho, area, probability) at n_points uniform radii in [r_pack, r_cover]."""
    if n_points < 2:
        raise DomainError(f"n_points must be >= 2, got {n_points}")
    rp = rb.len_a / 2.0
    rc = radii(rb).r_cover
    det = det_lattice(rb)
    out = []
    for k in range(n_points):
        rho = rp + (rc - rp) * k / (n_points - 1)
        area = area_exactly_one(rb, rho)
        out.append((rho, area, area / det))
    return out
