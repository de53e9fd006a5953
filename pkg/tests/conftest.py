import math

import numpy as np
import pytest

from onedisk import closed_forms, lattice_from_params

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

HEX_PROBABILITY = 4.0 * SQRT3 - 6.0
HEX_RHO = 0.5 * (math.sqrt(6.0) - SQRT2)
SQUARE_PROBABILITY = 2.0 * SQRT2 - 2.0
TWO_ARCS_PROBABILITY = 2.0 / math.sqrt(7.0)
FOUR_ARCS_PROBABILITY = math.sqrt(2.0 * SQRT2 - 2.0)


@pytest.fixture
def hexagonal():
    return lattice_from_params(1.0, math.pi / 3.0)


@pytest.fixture
def square():
    return lattice_from_params(1.0, math.pi / 2.0)


def random_params(n, seed, t_min=0.2, gamma_margin=0.0):
    """n random (t, gamma) pairs in the feasible domain, away from t -> 0.

    gamma_margin > 0 keeps gamma away from pi/2: within ~1e-4 of the right
    angle the longest-pair arc at the covering radius is so ill-conditioned
    that double precision cannot certify 1e-12 endpoint identities.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        t = rng.uniform(t_min, 1.0)
        g_lo = math.acos(t / 2.0)
        out.append((t, rng.uniform(g_lo, math.pi / 2.0 - gamma_margin)))
    return out


def random_lattices(n, seed, t_min=0.2, gamma_margin=0.0):
    return [
        lattice_from_params(t, g)
        for t, g in random_params(n, seed, t_min, gamma_margin)
    ]


def random_case1_params(n, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        t = rng.uniform(0.1, 1.0 / SQRT2 - 1e-6)
        g_lo = math.acos(t / 2.0)
        out.append((t, rng.uniform(g_lo + 1e-6, math.pi / 2.0 - 1e-6)))
    return out


def random_case2_params(n, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        t = rng.uniform(1.0 / SQRT2 + 1e-6, 1.0)
        g_lo = closed_forms.case2_gamma_min(t)
        out.append((t, rng.uniform(g_lo + 1e-6, math.pi / 2.0 - 1e-6)))
    return out


def random_case3_params(n, seed):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        t = rng.uniform(1.0 / SQRT2 + 1e-4, 1.0)
        g_lo = math.acos(t / 2.0)
        g_hi = closed_forms.case2_gamma_min(t)
        if g_hi - g_lo < 1e-5:
            continue
        out.append((t, rng.uniform(g_lo, g_hi - 1e-6)))
    return out
