import math

import pytest

from onedisk import (
    DomainError,
    arc_angles,
    area_derivative,
    area_exactly_one,
    area_profile,
    convex_total,
    det_lattice,
    equilibrium_probability,
    equilibrium_radius,
    lattice_from_params,
    radii,
)
from conftest import (
    FOUR_ARCS_PROBABILITY,
    HEX_PROBABILITY,
    HEX_RHO,
    SQRT2,
    SQRT3,
    TWO_ARCS_PROBABILITY,
    random_lattices,
    random_params,
)


def test_arc_angles_hexagonal(hexagonal):
    arcs = arc_angles(hexagonal, 0.5)
    assert (arcs.phi1, arcs.phi2, arcs.phi3) == (0.0, 0.0, 0.0)
    arcs = arc_angles(hexagonal, 1 / (2 * math.cos(math.pi / 12)))
    for phi in (arcs.phi1, arcs.phi2, arcs.phi3):
        assert phi == pytest.approx(math.pi / 6, abs=1e-12)


def test_arc_angles_square(square):
    arcs = arc_angles(square, 0.6)
    expected = 2 * math.acos(1 / 1.2)
    assert arcs.phi1 == pytest.approx(expected, abs=1e-12)
    assert arcs.phi1 == pytest.approx(1.1713711, abs=1e-7)
    assert arcs.phi2 == pytest.approx(expected, abs=1e-12)
    assert arcs.phi3 == 0.0  # sqrt2 > 2 * 0.6


def test_arc_angles_range_error(hexagonal):
    with pytest.raises(DomainError):
        arc_angles(hexagonal, 0.4)
    with pytest.raises(DomainError):
        arc_angles(hexagonal, 0.65)


def test_arc_angles_ordering_and_cap():
    for rb in random_lattices(50, seed=23):
        prof = radii(rb)
        for k in range(11):
            rho = prof.r_pack + (prof.r_cover - prof.r_pack) * k / 10
            arcs = arc_angles(rb, rho)
            assert arcs.phi1 >= arcs.phi2 >= arcs.phi3 >= 0.0
            assert 2 * arcs.total() <= 2 * math.pi + 1e-12
        assert 2 * arc_angles(rb, prof.r_cover).total() == pytest.approx(
            2 * math.pi, abs=1e-12
        )


def test_convex_total_endpoints_and_equilibrium(hexagonal):
    assert convex_total(arc_angles(hexagonal, 0.5)) == pytest.approx(
        2 * math.pi, abs=1e-12
    )
    assert convex_total(arc_angles(hexagonal, 1 / SQRT3)) == pytest.approx(
        0.0, abs=1e-12
    )
    assert convex_total(arc_angles(hexagonal, HEX_RHO)) == pytest.approx(
        math.pi, abs=1e-12
    )


def test_convex_total_monotone():
    # strict decrease over the full domain; 1e-12 endpoint identities need
    # gamma bounded away from pi/2 (see conftest.random_params)
    for rb in random_lattices(50, seed=29, gamma_margin=2e-3):
        prof = radii(rb)
        rhos = [
            prof.r_pack + (prof.r_cover - prof.r_pack) * k / 40 for k in range(41)
        ]
        values = [convex_total(arc_angles(rb, rho)) for rho in rhos]
        assert values[0] == pytest.approx(2 * math.pi, abs=1e-12)
        assert values[-1] == pytest.approx(0.0, abs=1e-12)
        for v1, v2 in zip(values, values[1:]):
            assert v1 > v2
    for rb in random_lattices(50, seed=30):
        prof = radii(rb)
        values = [
            convex_total(
                arc_angles(rb, prof.r_pack + (prof.r_cover - prof.r_pack) * k / 40)
            )
            for k in range(41)
        ]
        for v1, v2 in zip(values, values[1:]):
            assert v1 > v2


def test_convex_total_endpoints_at_right_angle(square):
    # the rectangle limit is exact: the longest-pair arc never opens
    prof = radii(square)
    assert convex_total(arc_angles(square, prof.r_pack)) == pytest.approx(
        2 * math.pi, abs=1e-15
    )
    assert convex_total(arc_angles(square, prof.r_cover)) == pytest.approx(
        0.0, abs=1e-12
    )


def test_area_hexagonal_values(hexagonal):
    assert area_exactly_one(hexagonal, 0.5) == pytest.approx(
        math.pi / 4, abs=1e-12
    )
    assert area_exactly_one(hexagonal, 1 / SQRT3) == pytest.approx(
        (3 * SQRT3 - math.pi) / 3, abs=1e-12
    )
    assert area_exactly_one(hexagonal, HEX_RHO) == pytest.approx(
        3 / (2 + SQRT3), abs=1e-12
    )


def test_area_derivative_values(hexagonal):
    assert area_derivative(hexagonal, 0.5) == pytest.approx(math.pi, abs=1e-12)
    assert area_derivative(hexagonal, HEX_RHO) == pytest.approx(0.0, abs=1e-10)
    assert area_derivative(hexagonal, 1 / SQRT3) == pytest.approx(
        -2 * math.pi / SQRT3, abs=1e-12
    )


def test_area_derivative_matches_finite_differences():
    # Central differences degrade like h^2 / d^(3/2) within distance d of the
    # arc-opening kinks at len_b/2 and len_c/2, so points are nudged off them.
    for rb in random_lattices(50, seed=31):
        prof = radii(rb)
        span = prof.r_cover - prof.r_pack
        h = 1e-5 * span
        kinks = [rb.len_b / 2, rb.len_c / 2]
        for k in range(1, 21):
            rho = prof.r_pack + span * k / 22
            for kink in kinks:
                if abs(rho - kink) < 300 * h:
                    rho += 600 * h
            fd = (
                area_exactly_one(rb, rho + h) - area_exactly_one(rb, rho - h)
            ) / (2 * h)
            assert abs(area_derivative(rb, rho) - fd) < 1e-6


def test_area_derivative_strictly_decreasing():
    for rb in random_lattices(30, seed=37):
        prof = radii(rb)
        values = [
            area_derivative(
                rb, prof.r_pack + (prof.r_cover - prof.r_pack) * k / 60
            )
            for k in range(61)
        ]
        for v1, v2 in zip(values, values[1:]):
            assert v2 < v1


def test_area_concavity_second_differences():
    for rb in random_lattices(30, seed=41):
        prof = radii(rb)
        for n in (10, 25, 60):
            rhos = [
                prof.r_pack + (prof.r_cover - prof.r_pack) * k / (n - 1)
                for k in range(n)
            ]
            areas = [area_exactly_one(rb, rho) for rho in rhos]
            for a0, a1, a2 in zip(areas, areas[1:], areas[2:]):
                assert a2 - 2 * a1 + a0 < 0.0


def test_equilibrium_radius_benchmarks(hexagonal, square):
    assert equilibrium_radius(hexagonal) == pytest.approx(HEX_RHO, abs=1e-12)
    assert equilibrium_radius(square) == pytest.approx(
        1 / (2 * math.cos(math.pi / 8)), abs=1e-12
    )
    four_arcs = lattice_from_params(1.0, math.acos(SQRT2 - 1))
    assert equilibrium_radius(four_arcs) == pytest.approx(
        math.sqrt(1 - 1 / SQRT2), abs=1e-12
    )


def test_equilibrium_radius_by_quadrature_maximization(square):
    """Independent check: golden-section maximization of the quadrature area
    peaks at the same radius the arc-sum bisection returns."""
    from onedisk import grid_area_exactly_one

    prof = radii(square)
    invphi = (math.sqrt(5) - 1) / 2
    a, b = prof.r_pack, prof.r_cover
    f = lambda rho: grid_area_exactly_one(square, rho, 512)
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > 1e-4:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    rho_star = 0.5 * (a + b)
    assert rho_star == pytest.approx(equilibrium_radius(square), abs=2e-3)


def test_equilibrium_residual():
    for rb in random_lattices(60, seed=43):
        rho = equilibrium_radius(rb)
        arcs = arc_angles(rb, rho)
        assert abs(arcs.total() - math.pi / 2) < 1e-12
        prof = radii(rb)
        assert prof.r_pack < rho < prof.r_cover


def test_equilibrium_probability_benchmarks(hexagonal, square):
    sol = equilibrium_probability(hexagonal)
    assert sol.probability == pytest.approx(HEX_PROBABILITY, abs=1e-12)
    assert sol.case_index == 3
    sol = equilibrium_probability(square)
    assert sol.probability == pytest.approx(2 * SQRT2 - 2, abs=1e-12)
    assert sol.case_index == 2
    two_arcs = lattice_from_params(1 / SQRT2, math.acos(1 / (2 * SQRT2)))
    sol = equilibrium_probability(two_arcs)
    assert sol.probability == pytest.approx(TWO_ARCS_PROBABILITY, abs=1e-12)
    assert sol.case_index == 1
    four_arcs = lattice_from_params(1.0, math.acos(SQRT2 - 1))
    sol = equilibrium_probability(four_arcs)
    assert sol.probability == pytest.approx(FOUR_ARCS_PROBABILITY, abs=1e-12)
    assert sol.case_index == 2


def test_equilibrium_solution_invariants():
    for rb in random_lattices(60, seed=47):
        sol = equilibrium_probability(rb)
        assert 0.0 < sol.probability < 1.0
        positive = sum(
            phi > 0 for phi in (sol.arcs.phi1, sol.arcs.phi2, sol.arcs.phi3)
        )
        assert sol.case_index == positive
        assert sol.area == pytest.approx(
            sol.probability * det_lattice(rb), rel=1e-12
        )


@pytest.mark.parametrize("s", [0.5, 2.0, 7.3])
def test_probability_scale_invariance(s):
    for rb in random_lattices(20, seed=53):
        sol = equilibrium_probability(rb)
        sol_s = equilibrium_probability(rb.scaled(s))
        assert sol_s.probability == pytest.approx(sol.probability, abs=1e-12)
        assert sol_s.rho_eq == pytest.approx(s * sol.rho_eq, rel=1e-12)


def test_cut_segments_disjoint_below_covering_radius():
    for rb in random_lattices(40, seed=59):
        prof = radii(rb)
        directions = [
            v.angle() for v in (rb.a, rb.b, -rb.c, -rb.a, -rb.b, rb.c)
        ]
        lengths = [rb.len_a, rb.len_b, rb.len_c] * 2
        for k in range(1, 20):
            rho = prof.r_pack + (prof.r_cover - prof.r_pack) * k / 20
            arcs = arc_angles(rb, rho)
            half = [arcs.phi1, arcs.phi2, arcs.phi3] * 2
            spans = sorted(
                (d - h / 2, d + h / 2)
                for d, h, L in zip(directions, half, lengths)
                if h > 0
            )
            for (lo1, hi1), (lo2, hi2) in zip(spans, spans[1:]):
                assert hi1 <= lo2 + 1e-9
            if len(spans) > 1:
                assert spans[-1][1] - 2 * math.pi <= spans[0][0] + 1e-9


def test_area_profile(hexagonal):
    profile = area_profile(hexagonal, 3)
    assert profile[0][0] == pytest.approx(0.5, abs=1e-15)
    assert profile[0][1] == pytest.approx(math.pi / 4, abs=1e-12)
    assert profile[-1][0] == pytest.approx(1 / SQRT3, abs=1e-12)
    assert profile[-1][1] == pytest.approx((3 * SQRT3 - math.pi) / 3, abs=1e-12)
    det = det_lattice(hexagonal)
    for rho, area, prob in profile:
        assert prob == pytest.approx(area / det, rel=1e-15)
    with pytest.raises(DomainError):
        area_profile(hexagonal, 1)


def test_area_profile_concave_sequence():
    for t, gamma in random_params(10, seed=61):
        rb = lattice_from_params(t, gamma)
        profile = area_profile(rb, 30)
        areas = [row[1] for row in profile]
        for a0, a1, a2 in zip(areas, areas[1:], areas[2:]):
            assert a2 - 2 * a1 + a0 < 0.0
