"""Pure-Python identity kernels.

Reference implementation of the hot numeric core. ``trisolve._kernels`` is a
compiled twin of this module; the two must stay line-for-line equivalent so
that both backends produce bit-identical results. All angles are radians,
all functions assume parts of an already-validated triangle (angles strictly
inside (0, pi), sides strictly positive).

Argument order is always (alpha, beta, gamma, a, b, c); cyclic forms are
obtained by rotating that tuple before the call, never by separate formulas.
"""

from math import cos, sin, tan

BACKEND_NAME = "python"


def mollweide_sin_parts(al, be, ga, a, b, c):
    """(LHS, RHS) of sin((alpha-beta)/2) / cos(gamma/2) = (a-b)/c."""
    return sin(0.5 * (al - be)) / cos(0.5 * ga), (a - b) / c


def mollweide_cos_parts(al, be, ga, a, b, c):
    """(LHS, RHS) of cos((alpha-beta)/2) / sin(gamma/2) = (a+b)/c."""
    return cos(0.5 * (al - be)) / sin(0.5 * ga), (a + b) / c


def law_of_tangents_parts(al, be, ga, a, b, c):
    """(LHS, RHS) of tan((alpha-beta)/2) / tan((alpha+beta)/2) = (a-b)/(a+b).

    cot(gamma/2) is evaluated as tan((alpha+beta)/2), which stays bounded for
    gamma near 180 degrees where tan(gamma/2) itself blows up.
    """
    return tan(0.5 * (al - be)) / tan(0.5 * (al + be)), (a - b) / (a + b)


def law_of_cosines_parts(al, be, ga, a, b, c):
    """(LHS, RHS) of c^2 = a^2 + b^2 - 2ab cos(gamma).

    The RHS is evaluated as (a-b)^2 + 4ab sin^2(gamma/2), algebraically the
    same but free of the catastrophic cancellation the textbook form suffers
    for needle triangles (a close to b with gamma small): both addends are
    nonnegative and bounded by c^2, so the result carries full precision at
    any aspect ratio.
    """
    d = a - b
    s = sin(0.5 * ga)
    return c * c, d * d + 4.0 * a * b * s * s


def sines_ratios(al, be, ga, a, b, c):
    """The three side/sin(angle) ratios; all equal for a consistent triangle."""
    return a / sin(al), b / sin(be), c / sin(ga)


def _norm(lhs, rhs):
    # scale-free residual metric: |LHS - RHS| / (1 + max(|LHS|, |RHS|))
    return abs(lhs - rhs) / (1.0 + max(abs(lhs), abs(rhs)))


def residual_profile(al, be, ga, a, b, c):
    """Every identity residual for one triangle, all three cyclic rotations.

    Returns a 14-tuple:
      [0:3]   mollweide sin residuals (raw LHS - RHS), rotations 0..2
      [3:6]   mollweide cos residuals (raw)
      [6:9]   law-of-tangents residuals (raw)
      [9:12]  law-of-cosines residuals divided by the rotated c^2
      [12]    sines spread: (max ratio - min ratio) / mean ratio
      [13]    max normalized residual over all of the above
    """
    rotations = (
        (al, be, ga, a, b, c),
        (be, ga, al, b, c, a),
        (ga, al, be, c, a, b),
    )
    out = []
    worst = 0.0
    for args in rotations:
        lhs, rhs = mollweide_sin_parts(*args)
        out.append(lhs - rhs)
        worst = max(worst, _norm(lhs, rhs))
    for args in rotations:
        lhs, rhs = mollweide_cos_parts(*args)
        out.append(lhs - rhs)
        worst = max(worst, _norm(lhs, rhs))
    for args in rotations:
        lhs, rhs = law_of_tangents_parts(*args)
        out.append(lhs - rhs)
        worst = max(worst, _norm(lhs, rhs))
    for args in rotations:
        lhs, rhs = law_of_cosines_parts(*args)
        scaled = (lhs - rhs) / lhs
        out.append(scaled)
        worst = max(worst, abs(scaled))
    ra, rb, rc = sines_ratios(al, be, ga, a, b, c)
    spread = (max(ra, rb, rc) - min(ra, rb, rc)) / ((ra + rb + rc) / 3.0)
    out.append(spread)
    worst = max(worst, spread)
    out.append(worst)
    return tuple(out)
