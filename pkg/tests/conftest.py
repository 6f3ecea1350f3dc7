import random

import pytest

from trisolve import ASA, solve_asa_aas


def random_triangle(rng, min_angle_deg=0.5, scale_exp=(-3.0, 3.0)):
    """A solver-built valid triangle with simplex-sampled angles (each at
    least min_angle_deg) and a log-uniform scale."""
    u, v = sorted((rng.random(), rng.random()))
    room = 180.0 - 3.0 * min_angle_deg
    a1 = min_angle_deg + room * u
    a2 = min_angle_deg + room * (v - u)
    side = 10.0 ** rng.uniform(*scale_exp)
    return solve_asa_aas(ASA(a1, side, a2)).triangle


@pytest.fixture
def rng():
    return random.Random(20260811)
