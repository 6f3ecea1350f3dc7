"""Independent oracles used by the tests.

Nothing in here calls the solver or the identity kernels: parts are measured
from explicit vertex coordinates, and SSA solution counts come from a dense
sweep of candidate placements. Expected values frozen into the tests were
produced by these functions.
"""

import itertools
import math

import numpy as np

COLLAPSE_RTOL = 1e-12  # same scale-relative degeneracy cutoff the library uses


def place(alpha_deg, b, c):
    """Vertices of the triangle with angle alpha at A, A at the origin,
    B = (c, 0) and C at distance b along the alpha ray."""
    al = math.radians(alpha_deg)
    return (0.0, 0.0), (c, 0.0), (b * math.cos(al), b * math.sin(al))


def _angle_at(p, q, r):
    # angle at p between rays pq and pr
    v1 = (q[0] - p[0], q[1] - p[1])
    v2 = (r[0] - p[0], r[1] - p[1])
    dot = v1[0] * v2[0] + v1[1] * v2[1]
    cross = v1[0] * v2[1] - v1[1] * v2[0]
    return math.degrees(math.atan2(abs(cross), dot))


def measure(a_xy, b_xy, c_xy):
    """The six parts (alpha, beta, gamma, a, b, c) measured from coordinates."""
    side_a = math.hypot(b_xy[0] - c_xy[0], b_xy[1] - c_xy[1])
    side_b = math.hypot(a_xy[0] - c_xy[0], a_xy[1] - c_xy[1])
    side_c = math.hypot(a_xy[0] - b_xy[0], a_xy[1] - b_xy[1])
    return (
        _angle_at(a_xy, b_xy, c_xy),
        _angle_at(b_xy, a_xy, c_xy),
        _angle_at(c_xy, a_xy, b_xy),
        side_a,
        side_b,
        side_c,
    )


def ssa_count_by_sweep(a, b, alpha_deg, samples=20001):
    """Number of distinct triangle placements for the SSA case (a, b, alpha).

    With A at the origin and C = (b cos alpha, b sin alpha), vertex B must sit
    on the positive x axis at a distance t with |C - (t, 0)| = a; solutions
    are the positive roots of g(t) = |C - (t, 0)| - a. The count comes from
    sign analysis of g over a dense grid of t (plus the apex t = Cx, where g
    is minimal): values within tau = 1e-12 * max(a, b) of zero count as a
    grazing contact, so an exact tangency registers as one root.
    """
    al = math.radians(alpha_deg)
    cx, cy = b * math.cos(al), b * math.sin(al)
    tau = COLLAPSE_RTOL * max(a, b)
    ts = np.linspace(10.0 * tau, a + b + tau, samples)
    if cx > 0.0:
        ts = np.sort(np.append(ts, cx))
    g = np.hypot(cx - ts, cy) - a
    signs = np.where(np.abs(g) <= tau, 0.0, np.sign(g)).astype(int)
    runs = [k for k, _ in itertools.groupby(signs)]
    roots = runs.count(0)
    for prev, cur in zip(runs, runs[1:]):
        if prev != 0 and cur != 0 and prev != cur:
            roots += 1
    return roots
