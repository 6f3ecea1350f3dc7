"""Residual certification of solved triangles.

verify() evaluates every identity the solver's results must satisfy, in all
three cyclic forms, and condenses them into one scale-free figure of merit.
reconstruct_proof_figure() rebuilds, numerically, the angle-bisector
construction behind the cosine identity and exposes its segment lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .core import Angle, Triangle
from .errors import InputError, PreconditionError

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ResidualReport:
    """All identity residuals for one triangle at one tolerance.

    mollweide_sin, mollweide_cos and law_of_tangents hold raw LHS - RHS
    residuals for rotations 0..2. cosines holds the law-of-cosines residual
    divided by the rotated c^2 (the raw value scales with the square of the
    triangle scale, the quotient is scale-free). sines_spread is
    (max - min) / mean over the three side/sin(angle) ratios.

    max_normalized_residual is the worst of: each Mollweide and tangents
    residual normalized by 1 + max(|LHS|, |RHS|), each scaled cosines
    residual, and the spread. passed is exactly
    max_normalized_residual <= tolerance.
    """

    mollweide_sin: tuple[float, float, float]
    mollweide_cos: tuple[float, float, float]
    law_of_tangents: tuple[float, float, float]
    cosines: tuple[float, float, float]
    sines_spread: float
    max_normalized_residual: float
    tolerance: float
    passed: bool

    def __post_init__(self):
        values = (
            *self.mollweide_sin,
            *self.mollweide_cos,
            *self.law_of_tangents,
            *self.cosines,
            self.sines_spread,
            self.max_normalized_residual,
            self.tolerance,
        )
        if not all(math.isfinite(v) for v in values):
            raise InputError("residual report fields must all be finite")
        if self.passed is not (self.max_normalized_residual <= self.tolerance):
            raise InputError("passed flag contradicts the residuals")


def verify(t: Triangle, tolerance: float = DEFAULT_TOLERANCE) -> ResidualReport:
    """Evaluate all identities on t and compare against tolerance.

    Deterministic: identical inputs produce bit-identical reports.
    """
    if not (isinstance(tolerance, (int, float)) and math.isfinite(tolerance) and tolerance > 0.0):
        raise InputError(f"tolerance must be a positive finite number, got {tolerance!r}")
    profile = kernels.residual_profile(*t.radian_parts())
    worst = profile[13]
    return ResidualReport(
        mollweide_sin=profile[0:3],
        mollweide_cos=profile[3:6],
        law_of_tangents=profile[6:9],
        cosines=profile[9:12],
        sines_spread=profile[12],
        max_normalized_residual=worst,
        tolerance=float(tolerance),
        passed=worst <= tolerance,
    )


@dataclass(frozen=True)
class ProofFigure:
    """Segment lengths in the bisector construction for the cosine identity.

    The bisector through C meets the line through A carrying the foot points
    at D, then E (on side BC) and F, with CD and BF perpendicular to AF:

        AD = DE = b sin(gamma/2)
        EF = (a - b) sin(gamma/2)
        AF = AD + DE + EF = (a + b) sin(gamma/2)

    and cos((alpha - beta)/2) = AF / c closes the construction. Segments are
    plain lengths (EF degenerates to 0 for a = b).
    """

    ad: float
    de: float
    ef: float
    af: float
    half_angle_sum: Angle
    half_angle_diff: Angle
    half_gamma: Angle


def reconstruct_proof_figure(t: Triangle) -> ProofFigure:
    """Compute the construction's segment lengths and half angles for t.

    Requires a >= b, the labeling the figure is drawn with; callers holding
    a < b relabel first by swapping the (a, alpha) and (b, beta) pairs, which
    leaves every segment unchanged because cos absorbs the sign of
    (alpha - beta)/2.
    """
    a, b = t.a.value, t.b.value
    if a < b:
        raise PreconditionError(
            "proof figure needs a >= b; swap the (a, alpha) and (b, beta) "
            "pairs and retry"
        )
    s = math.sin(0.5 * t.gamma.radians)
    ad = de = b * s
    ef = (a - b) * s
    return ProofFigure(
        ad=ad,
        de=de,
        ef=ef,
        af=ad + de + ef,
        half_angle_sum=Angle(0.5 * (t.alpha.degrees + t.beta.degrees)),
        half_angle_diff=Angle(0.5 * (t.alpha.degrees - t.beta.degrees)),
        half_gamma=Angle(0.5 * t.gamma.degrees),
    )
