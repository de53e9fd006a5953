"""Parameter-domain sweeps, case-region checks, and the global optimum.

The two-parameter domain is t = |a|/|b| in (0, 1] against the angle gamma
in [arccos(t/2), pi/2].  Sweeps grid this domain; ``global_optimize``
follows the best coarse cell with derivative-free coordinate descent
(golden-section line searches with shrinking brackets — the objective has
kinks along case boundaries, so no derivatives are used).  The optimum
sits at the corner (t, gamma) = (1, pi/3), the regular hexagonal lattice.

``quadrangle_scan`` walks the boundary of the (|a|, rho) quadrangle that
encloses the case-3 region and classifies its local extrema, locating the
critical radii of the case-3 objective along the right edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_forms import case2_gamma_min, case3_cos_gamma, case3_sin_phis
from .errors import DomainError, RefinementStallError
from .geometry import lattice_from_params
from .partial_disk import equilibrium_probability

# Sweeps exclude degenerate slivers below this aspect ratio (probability
# tends to 0 as t -> 0).
T_MIN = 0.05

_SQRT2 = math.sqrt(2.0)
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SweepRecord:
    t: float
    gamma: float
    rho_eq: float
    phi1: float
    phi2: float
    phi3: float
    case_index: int
    area: float
    probability: float


@dataclass(frozen=True)
class Optimum:
    record: SweepRecord
    refined: bool
    objective_gap_bound: float


@dataclass(frozen=True)
class RegionColumn:
    t: float
    intervals: tuple[tuple[int, float, float], ...]  # (case, gamma_lo, gamma_hi)


@dataclass(frozen=True)
class RegionSummary:
    columns: tuple[RegionColumn, ...]
    consistent: bool
    mismatches: int


@dataclass(frozen=True)
class CriticalPoint:
    kind: str  # "max" | "min" | "saddle"
    location: str  # "corner" | "bottom" | "right" | "top" | "left" | "interior"
    a_len: float
    rho: float
    probability: float


def evaluate_point(t: float, gamma: float) -> SweepRecord:
    """Full equilibrium record for one (t, gamma) lattice."""
    rb = lattice_from_params(t, gamma)
    sol = equilibrium_probability(rb)
    return SweepRecord(
        t, gamma, sol.rho_eq,
        sol.arcs.phi1, sol.arcs.phi2, sol.arcs.phi3,
        sol.case_index, sol.area, sol.probability,
    )


def sweep(t_steps: int, gamma_steps: int) -> list[SweepRecord]:
    """Equilibrium records on a t_steps x gamma_steps grid of the domain."""
    if t_steps < 2 or gamma_steps < 2:
        raise DomainError("t_steps and gamma_steps must be >= 2")
    records = []
    for i in range(t_steps):
        t = T_MIN + (1.0 - T_MIN) * i / (t_steps - 1)
        g_lo = math.acos(t / 2.0)
        g_hi = math.pi / 2.0
        for j in range(gamma_steps):
            gamma = g_lo + (g_hi - g_lo) * j / (gamma_steps - 1)
            records.append(evaluate_point(t, gamma))
    return records


def case_regions(records: list[SweepRecord]) -> RegionSummary:
    """Per-t gamma intervals by case, checked against the closed-form regions.

    A record may disagree with the prediction only within one grid cell of
    the t = 1/sqrt2 boundary or of the case-2/3 boundary angle.
    """
    if not records:
        raise DomainError("case_regions requires a non-empty sweep")
    columns: dict[float, list[SweepRecord]] = {}
    for r in records:
        columns.setdefault(r.t, []).append(r)
    ts = sorted(columns)
    dt = max((b - a for a, b in zip(ts, ts[1:])), default=math.inf)

    out_columns = []
    mismatches = 0
    for t in ts:
        col = sorted(columns[t], key=lambda r: r.gamma)
        dg = max(
            (b.gamma - a.gamma for a, b in zip(col, col[1:])), default=math.inf
        )
        intervals: list[tuple[int, float, float]] = []
        for r in col:
            if intervals and intervals[-1][0] == r.case_index:
                case, lo, _ = intervals[-1]
                intervals[-1] = (case, lo, r.gamma)
            else:
                intervals.append((r.case_index, r.gamma, r.gamma))
            if t <= 1.0 / _SQRT2:
                predicted = 1
                near_boundary = 1.0 / _SQRT2 - t <= dt
            else:
                g23 = case2_gamma_min(t)
                predicted = 2 if r.gamma >= g23 else 3
                near_boundary = (
                    t - 1.0 / _SQRT2 <= dt or abs(r.gamma - g23) <= dg
                )
            if r.case_index != predicted and not near_boundary:
                mismatches += 1
        out_columns.append(RegionColumn(t, tuple(intervals)))
    return RegionSummary(tuple(out_columns), mismatches == 0, mismatches)


def _golden_max(
    f, lo: float, hi: float, tol: float, x0: float | None = None
) -> tuple[float, float]:
    """Maximize f on [lo, hi].  The endpoints are candidates, so corner
    maxima are returned exactly; ties keep x0, so a caller sitting on a
    flat-to-ulp plateau is not jittered off its current point."""
    a, b = lo, hi
    h = b - a
    if h > tol:
        c = b - _INVPHI * h
        d = a + _INVPHI * h
        fc, fd = f(c), f(d)
        while h > tol:
            if fc >= fd:
                b, d, fd = d, c, fc
                h = b - a
                c = b - _INVPHI * h
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                h = b - a
                d = a + _INVPHI * h
                fd = f(d)
    candidates = [lo, a, 0.5 * (a + b), b, hi]
    if x0 is not None:
        candidates.insert(0, x0)
    best_x = candidates[0]
    best_val = f(best_x)
    for x in candidates[1:]:
        val = f(x)
        if val > best_val:
            best_x, best_val = x, val
    return best_x, best_val


def _domain_bounds(restrict: str | None):
    if restrict is None:
        return T_MIN, 1.0, lambda t: math.acos(t / 2.0), lambda t: math.pi / 2.0
    if restrict == "case1":
        return T_MIN, 1.0 / _SQRT2, lambda t: math.acos(t / 2.0), lambda t: math.pi / 2.0
    if restrict == "case2":
        return 1.0 / _SQRT2, 1.0, case2_gamma_min, lambda t: math.pi / 2.0
    if restrict == "case3":
        return 1.0 / _SQRT2, 1.0, lambda t: math.acos(t / 2.0), case2_gamma_min
    raise DomainError(f"unknown restriction {restrict!r}")


def global_optimize(
    coarse: int, refine_tol: float, restrict: str | None = None
) -> Optimum:
    """Coarse grid plus coordinate-descent refinement of the probability.

    The domain is mapped onto the unit square (u along t, v along the
    gamma interval of each t) so the line searches have fixed brackets.
    """
    if coarse < 32:
        raise DomainError(f"coarse must be >= 32, got {coarse}")
    if not refine_tol > 0.0:
        raise DomainError(f"refine_tol must be positive, got {refine_tol}")
    t_lo, t_hi, g_lo_fn, g_hi_fn = _domain_bounds(restrict)

    def objective(u: float, v: float) -> float:
        t = t_lo + (t_hi - t_lo) * u
        g_lo = g_lo_fn(t)
        g_hi = g_hi_fn(t)
        return evaluate_point(t, g_lo + (g_hi - g_lo) * v).probability

    best_u = best_v = 0.0
    best = -math.inf
    for i in range(coarse):
        u = i / (coarse - 1)
        for j in range(coarse):
            v = j / (coarse - 1)
            p = objective(u, v)
            if p > best:
                best, best_u, best_v = p, u, v
    coarse_best = best

    u, v = best_u, best_v
    step = 1.5 / coarse
    gap = 0.0
    converged = False
    stall = 0
    for _ in range(200):
        prev_best, prev_u, prev_v = best, u, v
        u, fu = _golden_max(
            lambda x: objective(x, v),
            max(0.0, u - step), min(1.0, u + step), 1e-13, x0=u,
        )
        best = max(best, fu)
        v, fv = _golden_max(
            lambda y: objective(u, y),
            max(0.0, v - step), min(1.0, v + step), 1e-13, x0=v,
        )
        best = max(best, fv)
        gap = max(gap, best - coarse_best)
        moved = max(abs(u - prev_u), abs(v - prev_v))
        # near a smooth optimum the objective is flat to ulps over ~1e-8 in
        # the parameters, so parameter movement alone cannot reach 0 exactly
        if best - prev_best < refine_tol and moved < 1e-7:
            stall += 1
            if stall >= 2:
                converged = True
                break
        else:
            stall = 0
        step = max(4.0 * moved, step * 0.5)
    if not converged:
        raise RefinementStallError(
            f"no convergence after 200 sweeps (last improvement {best - prev_best})"
        )

    t = t_lo + (t_hi - t_lo) * u
    g_lo = g_lo_fn(t)
    gamma = g_lo + (g_hi_fn(t) - g_lo) * v
    return Optimum(evaluate_point(t, gamma), True, gap)


# --- quadrangle enclosing the case-3 region, in (|a|, rho) coordinates ---

_S_LO = 1.0 / _SQRT2
_S_HI = 1.0


def _upper_curve(s: float) -> float:
    """Covering radius at the largest case-3 angle: |c| / (2 sin gamma_max)."""
    gm = case2_gamma_min(s)
    lc = math.sqrt(s * s + 1.0 - 2.0 * s * math.cos(gm))
    return lc / (2.0 * math.sin(gm))


def _upper_line(s: float) -> float:
    y0, y1 = _upper_curve(_S_LO), _upper_curve(_S_HI)
    return y1 + (y0 - y1) * (s - _S_HI) / (_S_LO - _S_HI)


def quadrangle_probability(s: float, rho: float) -> float:
    """The case-3 objective extended over the enclosing quadrangle."""
    s1, s2, s3 = case3_sin_phis(s, rho)
    cg = case3_cos_gamma(s, rho)
    return 2.0 * rho * rho * (s1 + s2 + s3) / (s * math.sqrt(1.0 - cg * cg))


def quadrangle_upper_gap(n: int) -> list[tuple[float, float, float, float, float]]:
    """(s, rho_line, rho_curve, p_line, p_curve) across the upper boundary,
    showing the straight-line over-approximation against the true curve."""
    out = []
    for k in range(n + 1):
        s = _S_LO + (_S_HI - _S_LO) * k / n
        rl, rc = _upper_line(s), _upper_curve(s)
        out.append(
            (s, rl, rc, quadrangle_probability(s, rl), quadrangle_probability(s, rc))
        )
    return out


def _quad_loop(n: int, upper) -> list[tuple[float, float]]:
    up_lo, up_hi = upper(_S_LO), upper(_S_HI)
    pts = []
    for k in range(n):  # bottom, left corner included
        pts.append((_S_LO + (_S_HI - _S_LO) * k / n, 0.5))
    for k in range(n):  # right edge upward
        pts.append((_S_HI, 0.5 + (up_hi - 0.5) * k / n))
    for k in range(n):  # upper boundary, right to left
        s = _S_HI + (_S_LO - _S_HI) * k / n
        pts.append((s, upper(s)))
    for k in range(n):  # left edge downward
        pts.append((_S_LO, up_lo + (0.5 - up_lo) * k / n))
    return pts


def _refine_on_edge(point_at, tau: float, half_width: float, sign: float) -> tuple[float, float]:
    lo = max(0.0, tau - half_width)
    hi = min(1.0, tau + half_width)
    tau_best, val = _golden_max(
        lambda x: sign * quadrangle_probability(*point_at(x)), lo, hi, 1e-12
    )
    return tau_best, sign * val


def quadrangle_scan(n: int, upper_boundary: str = "line") -> list[CriticalPoint]:
    """Classified local extrema of the case-3 objective on the quadrangle.

    Walks the boundary loop with n samples per edge (cyclic extremum
    detection, then golden-section refinement of edge-interior extrema) and
    searches the interior for stationary points via finite-difference
    gradients.
    """
    if n < 100:
        raise DomainError(f"n must be >= 100, got {n}")
    if upper_boundary not in ("line", "curve"):
        raise DomainError(f"upper_boundary must be 'line' or 'curve'")
    upper = _upper_line if upper_boundary == "line" else _upper_curve

    pts = _quad_loop(n, upper)
    vals = [quadrangle_probability(s, r) for s, r in pts]
    m = len(pts)
    edge_names = ("bottom", "right", "top", "left")
    up_lo, up_hi = upper(_S_LO), upper(_S_HI)

    def point_at(edge: int, tau: float) -> tuple[float, float]:
        if edge == 0:
            return _S_LO + (_S_HI - _S_LO) * tau, 0.5
        if edge == 1:
            return _S_HI, 0.5 + (up_hi - 0.5) * tau
        if edge == 2:
            s = _S_HI + (_S_LO - _S_HI) * tau
            return s, upper(s)
        return _S_LO, up_lo + (0.5 - up_lo) * tau

    found: list[CriticalPoint] = []
    for i in range(m):
        v0, v1, v2 = vals[i - 1], vals[i], vals[(i + 1) % m]
        if v1 > v0 and v1 > v2:
            kind = "max"
        elif v1 < v0 and v1 < v2:
            kind = "min"
        else:
            continue
        if i % n == 0:
            s, r = pts[i]
            found.append(CriticalPoint(kind, "corner", s, r, v1))
        else:
            edge = i // n
            tau = (i % n) / n
            sign = 1.0 if kind == "max" else -1.0
            tau_ref, val = _refine_on_edge(
                lambda x, e=edge: point_at(e, x), tau, 2.0 / n, sign
            )
            s, r = point_at(edge, tau_ref)
            found.append(CriticalPoint(kind, edge_names[edge], s, r, val))

    found.extend(_interior_stationary_points(upper))
    return found


def _quad_gradient(s: float, rho: float, h: float = 1e-6) -> tuple[float, float]:
    f = quadrangle_probability
    return (
        (f(s + h, rho) - f(s - h, rho)) / (2.0 * h),
        (f(s, rho + h) - f(s, rho - h)) / (2.0 * h),
    )


def _interior_stationary_points(upper) -> list[CriticalPoint]:
    margin = 1e-3
    found: list[CriticalPoint] = []
    grid = 24
    for i in range(1, grid):
        s = _S_LO + (_S_HI - _S_LO) * i / grid
        top = upper(s)
        for j in range(1, grid):
            rho = 0.5 + (top - 0.5) * j / grid
            if not (
                _S_LO + margin < s < _S_HI - margin
                and 0.5 + margin < rho < top - margin
            ):
                continue
            p = _newton_stationary(s, rho, upper, margin)
            if p is None:
                continue
            if any(
                abs(p.a_len - q.a_len) < 1e-4 and abs(p.rho - q.rho) < 1e-4
                for q in found
            ):
                continue
            found.append(p)
    return found


def _newton_stationary(s, rho, upper, margin) -> CriticalPoint | None:
    h = 1e-5
    for _ in range(30):
        gs, gr = _quad_gradient(s, rho)
        if math.hypot(gs, gr) < 1e-8:
            # classify by finite-difference Hessian eigenvalue signs
            f = quadrangle_probability
            fss = (f(s + h, rho) - 2 * f(s, rho) + f(s - h, rho)) / (h * h)
            frr = (f(s, rho + h) - 2 * f(s, rho) + f(s, rho - h)) / (h * h)
            fsr = (
                f(s + h, rho + h) - f(s + h, rho - h)
                - f(s - h, rho + h) + f(s - h, rho - h)
            ) / (4 * h * h)
            disc = math.sqrt(((fss - frr) / 2) ** 2 + fsr * fsr)
            e1 = (fss + frr) / 2 + disc
            e2 = (fss + frr) / 2 - disc
            if e1 < 0 and e2 < 0:
                kind = "max"
            elif e1 > 0 and e2 > 0:
                kind = "min"
            else:
                kind = "saddle"
            return CriticalPoint(kind, "interior", s, rho, f(s, rho))
        gsp, grp = _quad_gradient(s + h, rho)
        gsm, grm = _quad_gradient(s - h, rho)
        gsq, grq = _quad_gradient(s, rho + h)
        gsr_, grr_ = _quad_gradient(s, rho - h)
        j11 = (gsp - gsm) / (2 * h)
        j21 = (grp - grm) / (2 * h)
        j12 = (gsq - gsr_) / (2 * h)
        j22 = (grq - grr_) / (2 * h)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            return None
        ds = (gs * j22 - gr * j12) / det
        dr = (gr * j11 - gs * j21) / det
        s, rho = s - ds, rho - dr
        if not (
            _S_LO + margin <= s <= _S_HI - margin
            and 0.5 + margin <= rho <= upper(s) - margin
        ):
            return None
    return None
