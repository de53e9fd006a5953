"""Closed-form equilibrium formulas for the three arc-count cases.

All formulas use the |b| = 1 normalization with t = |a|/|b| in (0, 1].
The case of a lattice is the number of neighbor pairs whose disks clip
the central disk at the equilibrium radius:

* case 1 (t <= 1/sqrt2): only the |a| pair cuts, rho = t/sqrt2 and the
  probability is t / sin(gamma);
* case 2: the |a| and |b| pairs cut, rho depends on t alone;
* case 3: all three pairs cut; there is no compact probability formula,
  so the relation between gamma and rho is exposed instead and validated
  by round-tripping through the numeric equilibrium solver.

These are cross-checks for the numeric pipeline and the source of the
three per-case optima.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

_SQRT2 = math.sqrt(2.0)
_EDGE_TOL = 1e-12


@dataclass(frozen=True)
class CaseOptimum:
    case_index: int
    t_opt: float
    gamma_opt: float
    rho_opt: float
    probability: float


@dataclass(frozen=True)
class CriticalRoots:
    """Stationary radii of the case-3 objective at t = 1 (rho_3 is beyond
    any covering radius and therefore excluded)."""

    rho_1: float
    rho_2: float
    rho_3: float
    c_const: float


def _check_gamma(t: float, gamma: float) -> None:
    lo = math.acos(t / 2.0)
    if not (lo - 1e-9 <= gamma <= math.pi / 2.0 + 1e-9):
        raise DomainError(f"gamma={gamma} outside [arccos(t/2), pi/2] at t={t}")


def case1_probability(t: float, gamma: float) -> float:
    """Equilibrium probability t / sin(gamma) for case-1 lattices."""
    if not (0.0 < t <= 1.0 / _SQRT2 + _EDGE_TOL):
        raise DomainError(f"case 1 requires 0 < t <= 1/sqrt2, got {t}")
    _check_gamma(t, gamma)
    return t / math.sin(gamma)


def case1_optimum() -> CaseOptimum:
    t = 1.0 / _SQRT2
    gamma = math.acos(1.0 / (2.0 * _SQRT2))
    return CaseOptimum(1, t, gamma, 0.5, 2.0 / math.sqrt(7.0))


def _check_case2_t(t: float) -> None:
    if not (1.0 / _SQRT2 - _EDGE_TOL <= t <= 1.0 + _EDGE_TOL):
        raise DomainError(f"case 2 requires 1/sqrt2 < t <= 1, got {t}")


def case2_radius(t: float) -> float:
    """Case-2 equilibrium radius; depends on t only, not on gamma."""
    _check_case2_t(t)
    return math.sqrt(0.5 * (t * t + 1.0 - _SQRT2 * t))


def case2_gamma_min(t: float) -> float:
    """Smallest case-2 angle at this t (the case-2/case-3 boundary)."""
    _check_case2_t(t)
    return math.acos(_SQRT2 - (t * t + 1.0) / (2.0 * t))


def case2_probability(t: float, gamma: float) -> float:
    """Equilibrium probability (2 sqrt2 t - t^2 - 1) / (t sin gamma)."""
    _check_case2_t(t)
    if not (case2_gamma_min(t) - 1e-9 <= gamma <= math.pi / 2.0 + 1e-9):
        raise DomainError(f"gamma={gamma} outside the case-2 range at t={t}")
    return (2.0 * _SQRT2 * t - t * t - 1.0) / (t * math.sin(gamma))


def case2_optimum() -> CaseOptimum:
    gamma = math.acos(_SQRT2 - 1.0)
    rho = math.sqrt(1.0 - 1.0 / _SQRT2)
    return CaseOptimum(2, 1.0, gamma, rho, math.sqrt(2.0 * _SQRT2 - 2.0))


def _check_case3(t: float, rho: float) -> tuple[float, float]:
    """Validate (t, rho) and return the clamped radicands 4rho^2 - t^2, -1."""
    if not (0.0 < t <= 1.0 + _EDGE_TOL):
        raise DomainError(f"case 3 requires 0 < t <= 1, got {t}")
    if 2.0 * rho < 1.0 - _EDGE_TOL:
        raise DomainError(f"case 3 requires 2 rho >= 1, got rho={rho}")
    q = 4.0 * rho * rho
    return max(q - t * t, 0.0), max(q - 1.0, 0.0)


def case3_sin_phis(t: float, rho: float) -> tuple[float, float, float]:
    """sin(phi_i) of the three cut arcs at equilibrium, in terms of (t, rho)."""
    qa, qb = _check_case3(t, rho)
    r2 = rho * rho
    sin1 = t * math.sqrt(qa) / (2.0 * r2)
    sin2 = math.sqrt(qb) / (2.0 * r2)
    sin3 = 1.0 - (t * math.sqrt(qb) + math.sqrt(qa)) ** 2 / (8.0 * r2 * r2)
    return sin1, sin2, sin3


def case3_cos_gamma(t: float, rho: float) -> float:
    """cos(gamma) of the lattice whose case-3 equilibrium radius is rho.

    Inverts the equilibrium condition phi1 + phi2 + phi3 = pi/2 expressed
    through the half-angle cosines len_i / (2 rho).
    """
    qa, qb = _check_case3(t, rho)
    r2 = rho * rho
    return (
        (t * t + 1.0 - 2.0 * r2) / (2.0 * t)
        - (1.0 - 2.0 * r2) / (4.0 * r2) * math.sqrt(qa)
        - (t * t - 2.0 * r2) / (4.0 * r2 * t) * math.sqrt(qb)
    )


def case3_critical_roots() -> CriticalRoots:
    c = 3.0 + 2.0 * _SQRT2
    rho_1 = 0.5 * (math.sqrt(6.0) - _SQRT2)
    rho_2 = 0.5 * math.sqrt(c ** (1.0 / 3.0) - 1.0 + c ** (-1.0 / 3.0))
    rho_3 = 0.5 * (math.sqrt(6.0) + _SQRT2)
    return CriticalRoots(rho_1, rho_2, rho_3, c)


def case3_optimum() -> CaseOptimum:
    rho = 0.5 * (math.sqrt(6.0) - _SQRT2)  # = 1 / (2 cos(pi/12))
    return CaseOptimum(3, 1.0, math.pi / 3.0, rho, 4.0 * math.sqrt(3.0) - 6.0)
