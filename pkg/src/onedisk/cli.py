"""Command-line front end.

Subcommands: ``analyze`` one lattice, ``sweep`` the parameter domain,
``optimize`` for the global maximum, ``verify`` analytics against the
sampling oracle, ``profile`` the area curve of one lattice.

Determinism contract: CSV floats use 9 significant digits and ``\\n`` line
endings; JSON uses Python's shortest round-trip float repr.  Exit codes:
0 success/PASS, 1 verification FAIL, 2 invalid input, 3 I/O error.
Angles are degrees on the command line, radians everywhere else.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from . import closed_forms, oracle
from .errors import OnediskError
from .geometry import (
    LatticeBasis,
    ReducedBasis,
    Vec2,
    det_lattice,
    lattice_from_params,
    radii,
    reduce_basis,
    voronoi_cell,
)
from .optimizer import global_optimize, sweep
from .partial_disk import area_profile, equilibrium_probability

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

SEED_ENV_VAR = "ONEDISK_SEED"
DEFAULT_SEED = 0x5EED
SWEEP_HEADER = "t,gamma_rad,rho_eq,phi1,phi2,phi3,case,area,probability"
PROFILE_HEADER = "rho,area,probability"


@dataclass
class RunConfig:
    command: str
    t: float | None = None
    gamma_deg: float | None = None
    a: Vec2 | None = None
    b: Vec2 | None = None
    rho: float | None = None
    samples: int = 10**6
    seed: int = DEFAULT_SEED
    grid: int = 101
    resolution: int = 1024
    out_path: str | None = None
    format: str = "csv"
    coarse: int = 64
    refine_tol: float = 1e-10
    restrict: str | None = None


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _parse_vec(text: str) -> Vec2:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return Vec2(float(parts[0]), float(parts[1]))


def _parse_seed(text: str) -> int:
    return int(text, 0)  # accepts decimal and 0x... hex


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV_VAR)
    return _parse_seed(env) if env else DEFAULT_SEED


def _build_lattice(cfg: RunConfig) -> ReducedBasis:
    has_params = cfg.t is not None or cfg.gamma_deg is not None
    has_vectors = cfg.a is not None or cfg.b is not None
    if has_params == has_vectors:
        raise ValueError(
            "provide exactly one of (--t and --gamma-deg) or (--a and --b)"
        )
    if has_params:
        if cfg.t is None or cfg.gamma_deg is None:
            raise ValueError("--t and --gamma-deg must be given together")
        return lattice_from_params(cfg.t, math.radians(cfg.gamma_deg))
    if cfg.a is None or cfg.b is None:
        raise ValueError("--a and --b must be given together")
    return reduce_basis(LatticeBasis(cfg.a, cfg.b))


def analyze_lattice(rb: ReducedBasis) -> dict:
    """The full analysis record for one lattice (the `analyze` payload)."""
    prof = radii(rb)
    cell = voronoi_cell(rb)
    sol = equilibrium_probability(rb)
    return {
        "a_x": rb.a.x, "a_y": rb.a.y,
        "b_x": rb.b.x, "b_y": rb.b.y,
        "c_x": rb.c.x, "c_y": rb.c.y,
        "len_a": rb.len_a, "len_b": rb.len_b, "len_c": rb.len_c,
        "gamma_rad": rb.gamma,
        "det": det_lattice(rb),
        "r_pack": prof.r_pack,
        "r_cover": prof.r_cover,
        "voronoi_vertices": [[v.x, v.y] for v in cell.vertices],
        "rho_eq": sol.rho_eq,
        "phi1": sol.arcs.phi1, "phi2": sol.arcs.phi2, "phi3": sol.arcs.phi3,
        "case": sol.case_index,
        "area": sol.area,
        "probability": sol.probability,
    }


def _write_out(cfg: RunConfig, text: str) -> None:
    if cfg.out_path:
        with open(cfg.out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record_to_csv(record: dict) -> str:
    cells = []
    for key, value in record.items():
        if key == "voronoi_vertices":
            cells.append('"' + ";".join(f"{_fmt(x)} {_fmt(y)}" for x, y in value) + '"')
        elif key == "case":
            cells.append(str(value))
        else:
            cells.append(_fmt(value))
    return ",".join(record.keys()) + "\n" + ",".join(cells) + "\n"


def cmd_analyze(cfg: RunConfig) -> int:
    record = analyze_lattice(_build_lattice(cfg))
    if cfg.format == "json":
        _write_out(cfg, json.dumps(record) + "\n")
    else:
        _write_out(cfg, _record_to_csv(record))
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    records = sweep(cfg.grid, cfg.grid)
    if cfg.format == "json":
        rows = [
            {
                "t": r.t, "gamma_rad": r.gamma, "rho_eq": r.rho_eq,
                "phi1": r.phi1, "phi2": r.phi2, "phi3": r.phi3,
                "case": r.case_index, "area": r.area,
                "probability": r.probability,
            }
            for r in records
        ]
        _write_out(cfg, json.dumps(rows) + "\n")
        return EXIT_OK
    lines = [SWEEP_HEADER]
    for r in records:
        lines.append(
            f"{_fmt(r.t)},{_fmt(r.gamma)},{_fmt(r.rho_eq)},{_fmt(r.phi1)},"
            f"{_fmt(r.phi2)},{_fmt(r.phi3)},{r.case_index},{_fmt(r.area)},"
            f"{_fmt(r.probability)}"
        )
    _write_out(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_profile(cfg: RunConfig) -> int:
    rb = _build_lattice(cfg)
    rows = area_profile(rb, cfg.grid)
    if cfg.format == "json":
        payload = [
            {"rho": rho, "area": area, "probability": p} for rho, area, p in rows
        ]
        _write_out(cfg, json.dumps(payload) + "\n")
        return EXIT_OK
    lines = [PROFILE_HEADER]
    lines += [f"{_fmt(rho)},{_fmt(area)},{_fmt(p)}" for rho, area, p in rows]
    _write_out(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    from .partial_disk import area_exactly_one, equilibrium_radius

    rb = _build_lattice(cfg)
    rho = cfg.rho if cfg.rho is not None else equilibrium_radius(rb)
    det = det_lattice(rb)
    prof = radii(rb)
    area = area_exactly_one(rb, rho)
    prob = area / det

    mc = oracle.mc_exactly_one(rb, rho, cfg.samples, cfg.seed)
    grid_area = oracle.grid_area_exactly_one(rb, rho, cfg.resolution)
    cover = oracle.mc_cover_count(rb, rho, cfg.samples, cfg.seed)
    density = math.pi * rho * rho / det

    mc_ok = abs(mc.mean - prob) <= 4.0 * max(mc.std_error, 1e-15)
    grid_bound = 5.0 * (prof.r_cover * 4.0 / cfg.resolution) * prof.r_cover
    grid_ok = abs(grid_area - area) <= grid_bound
    cover_ok = abs(cover.mean - density) <= 4.0 * max(cover.std_error, 1e-15)

    out = [
        f"lattice: len_a={_fmt(rb.len_a)} len_b={_fmt(rb.len_b)} "
        f"len_c={_fmt(rb.len_c)} gamma_rad={_fmt(rb.gamma)}",
        f"rho={_fmt(rho)} analytic_probability={_fmt(prob)} analytic_area={_fmt(area)}",
        f"mc_exactly_one={_fmt(mc.mean)} +/- {_fmt(mc.std_error)} "
        f"(n={mc.n_samples}, seed={mc.seed}) -> {'ok' if mc_ok else 'MISMATCH'}",
        f"grid_area={_fmt(grid_area)} (resolution={cfg.resolution}, "
        f"bound={_fmt(grid_bound)}) -> {'ok' if grid_ok else 'MISMATCH'}",
        f"mc_cover_count={_fmt(cover.mean)} +/- {_fmt(cover.std_error)} "
        f"vs density={_fmt(density)} -> {'ok' if cover_ok else 'MISMATCH'}",
    ]
    passed = mc_ok and grid_ok and cover_ok
    out.append("PASS" if passed else "FAIL")
    _write_out(cfg, "\n".join(out) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_optimize(cfg: RunConfig) -> int:
    opt = global_optimize(cfg.coarse, cfg.refine_tol, cfg.restrict)
    r = opt.record
    lines = [
        f"optimum: t={r.t:.6f} gamma_deg={math.degrees(r.gamma):.6f} "
        f"rho_eq={_fmt(r.rho_eq)} probability={_fmt(r.probability)} "
        f"case={r.case_index}",
        f"refined={opt.refined} objective_gap_bound={_fmt(opt.objective_gap_bound)}",
        "case optima for comparison:",
    ]
    for copt in (
        closed_forms.case1_optimum(),
        closed_forms.case2_optimum(),
        closed_forms.case3_optimum(),
    ):
        lines.append(
            f"  case {copt.case_index}: t={_fmt(copt.t_opt)} "
            f"gamma_deg={math.degrees(copt.gamma_opt):.6f} "
            f"rho={_fmt(copt.rho_opt)} probability={_fmt(copt.probability)}"
        )
    _write_out(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def _add_lattice_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t", type=float, help="|a|/|b| ratio in (0, 1]")
    p.add_argument("--gamma-deg", type=float, help="angle between a and b, degrees")
    p.add_argument("--a", type=_parse_vec, metavar="X,Y", help="first basis vector")
    p.add_argument("--b", type=_parse_vec, metavar="X,Y", help="second basis vector")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onedisk",
        description=(
            "Lattice disk configurations under the probability that a random "
            "point lies in exactly one disk."
        ),
    )
    parser.add_argument(
        "--config", help="JSON file with defaults (flags take precedence)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="equilibrium analysis of one lattice")
    _add_lattice_args(p)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", dest="out_path")

    p = sub.add_parser("sweep", help="grid the (t, gamma) domain")
    p.add_argument("--grid", type=int, help="grid steps per axis (default 101)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", dest="out_path")

    p = sub.add_parser("optimize", help="find the best lattice")
    p.add_argument("--coarse", type=int, help="coarse grid steps (default 64)")
    p.add_argument("--refine-tol", type=float, help="refinement tolerance")
    p.add_argument("--restrict", choices=("case1", "case2", "case3"))
    p.add_argument("--out", dest="out_path")

    p = sub.add_parser("verify", help="check analytics against the oracle")
    _add_lattice_args(p)
    p.add_argument("--rho", type=float, help="radius (default: equilibrium)")
    p.add_argument("--samples", type=int, help="Monte Carlo samples (default 1e6)")
    p.add_argument("--seed", type=_parse_seed, help="decimal or hex RNG seed")
    p.add_argument("--resolution", type=int, help="quadrature grid (default 1024)")
    p.add_argument("--out", dest="out_path")

    p = sub.add_parser("profile", help="area/probability curve over the radius range")
    _add_lattice_args(p)
    p.add_argument("--grid", type=int, help="number of radii (default 101)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", dest="out_path")

    return parser


def _make_config(args: argparse.Namespace) -> RunConfig:
    file_cfg: dict = {}
    if args.config:
        with open(args.config) as fh:
            file_cfg = json.load(fh)

    cfg = RunConfig(command=args.command, seed=_default_seed())
    for field in (
        "t", "gamma_deg", "rho", "samples", "seed", "grid", "resolution",
        "out_path", "format", "coarse", "refine_tol", "restrict",
    ):
        value = getattr(args, field, None)
        if value is None:
            value = file_cfg.get(field)
        if value is not None:
            setattr(cfg, field, value)
    for field in ("a", "b"):
        value = getattr(args, field, None)
        if value is None and field in file_cfg:
            value = Vec2(*file_cfg[field])
        if value is not None:
            setattr(cfg, field, value)
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _make_config(args)
        handler = {
            "analyze": cmd_analyze,
            "sweep": cmd_sweep,
            "optimize": cmd_optimize,
            "verify": cmd_verify,
            "profile": cmd_profile,
        }[cfg.command]
        return handler(cfg)
    except OSError as exc:
        print(f"onedisk: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OnediskError, ValueError) as exc:
        print(f"onedisk: invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
