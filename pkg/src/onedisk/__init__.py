"""Lattice disk configurations scored by exactly-one-disk coverage.

For a planar lattice of equal disks, this package computes the equilibrium
radius that maximizes the probability that a uniformly random point lies
in exactly one disk, the probability itself, closed-form per-case optima,
and independent Monte Carlo / quadrature verification of all of it.
"""

from .closed_forms import (
    CaseOptimum,
    CriticalRoots,
    case1_optimum,
    case1_probability,
    case2_gamma_min,
    case2_optimum,
    case2_probability,
    case2_radius,
    case3_cos_gamma,
    case3_critical_roots,
    case3_optimum,
    case3_sin_phis,
)
from .errors import (
    DegenerateBasisError,
    DomainError,
    OnediskError,
    RefinementStallError,
    SolverError,
)
from .geometry import (
    LatticeBasis,
    RadiiProfile,
    ReducedBasis,
    Vec2,
    VoronoiCell,
    det_lattice,
    lattice_from_params,
    neighbors_within,
    radii,
    reduce_basis,
    voronoi_cell,
)
from .oracle import (
    GENERATOR_NAME,
    McEstimate,
    grid_area_exactly_one,
    mc_cover_count,
    mc_exactly_one,
)
from .optimizer import (
    CriticalPoint,
    Optimum,
    RegionSummary,
    SweepRecord,
    case_regions,
    evaluate_point,
    global_optimize,
    quadrangle_scan,
    quadrangle_upper_gap,
    sweep,
)
from .partial_disk import (
    ArcAngles,
    EquilibriumSolution,
    arc_angles,
    area_derivative,
    area_exactly_one,
    area_profile,
    convex_total,
    equilibrium_probability,
    equilibrium_radius,
)

__version__ = "0.1.0"

__all__ = [
    "ArcAngles",
    "CaseOptimum",
    "CriticalPoint",
    "CriticalRoots",
    "DegenerateBasisError",
    "DomainError",
    "EquilibriumSolution",
    "GENERATOR_NAME",
    "LatticeBasis",
    "McEstimate",
    "OnediskError",
    "Optimum",
    "RadiiProfile",
    "ReducedBasis",
    "RefinementStallError",
    "RegionSummary",
    "SolverError",
    "SweepRecord",
    "Vec2",
    "VoronoiCell",
    "arc_angles",
    "area_derivative",
    "area_exactly_one",
    "area_profile",
    "case1_optimum",
    "case1_probability",
    "case2_gamma_min",
    "case2_optimum",
    "case2_probability",
    "case2_radius",
    "case3_cos_gamma",
    "case3_critical_roots",
    "case3_optimum",
    "case3_sin_phis",
    "case_regions",
    "convex_total",
    "det_lattice",
    "equilibrium_probability",
    "equilibrium_radius",
    "evaluate_point",
    "global_optimize",
    "grid_area_exactly_one",
    "lattice_from_params",
    "mc_cover_count",
    "mc_exactly_one",
    "neighbors_within",
    "quadrangle_scan",
    "quadrangle_upper_gap",
    "radii",
    "reduce_basis",
    "sweep",
    "voronoi_cell",
]
