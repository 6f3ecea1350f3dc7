"""Solvers for the five classical given-data cases.

Geometric impossibility is an outcome, not an exception: every solver returns
NoSolution (with a reason), Unique or Two. InputError is reserved for parts
that violate their own invariants (non-positive side, angle out of range) and
is raised when the TriangleSpec is constructed.

Obtuse angles are recovered through the arccos form of the law of cosines,
never through arcsin, so the acute/obtuse ambiguity cannot bite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .core import (
    AAS,
    ASA,
    DEGENERACY_RTOL,
    SAS,
    SSA,
    SSS,
    Angle,
    Triangle,
    TriangleSpec,
    third_angle,
)
from .errors import InputError


@dataclass(frozen=True)
class NoSolution:
    """No triangle is consistent with the given parts."""

    reason: str

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return ()


@dataclass(frozen=True)
class Unique:
    """Exactly one triangle fits."""

    triangle: Triangle

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return (self.triangle,)


@dataclass(frozen=True)
class Two:
    """Both triangles of an ambiguous SSA case, ordered by ascending beta."""

    first: Triangle
    second: Triangle

    def __post_init__(self):
        if not self.first.beta.degrees < self.second.beta.degrees:
            raise InputError("two-solution outcomes must be ordered by ascending beta")

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return (self.first, self.second)


SolveOutcome = Union[NoSolution, Unique, Two]


def solve(spec: TriangleSpec) -> SolveOutcome:
    """Dispatch to the case solver matching the spec."""
    if isinstance(spec, (ASA, AAS)):
        return solve_asa_aas(spec)
    if isinstance(spec, SSA):
        return solve_ssa(spec)
    if isinstance(spec, SAS):
        return solve_sas(spec)
    if isinstance(spec, SSS):
        return solve_sss(spec)
    raise InputError(f"not a triangle spec: {spec!r}")


def _flat(reason: str) -> NoSolution:
    return NoSolution(reason + " (degenerate flat triangle)")


def solve_asa_aas(spec: Union[ASA, AAS]) -> SolveOutcome:
    """Two angles and any side: complete the angles, then scale by the common
    law-of-sines ratio."""
    if isinstance(spec, ASA):
        one, two = spec.angle_a, spec.angle_b
    elif isinstance(spec, AAS):
        one, two = spec.angle1, spec.angle2
    else:
        raise InputError(f"not an ASA or AAS spec: {spec!r}")
    if one.degrees + two.degrees >= 180.0:
        return NoSolution(
            f"angles {one.degrees:g} and {two.degrees:g} already sum to 180 "
            "degrees or more"
        )
    rest = third_angle(one, two)
    try:
        if isinstance(spec, ASA):
            ratio = spec.side_c.value / math.sin(rest.radians)
            a = ratio * math.sin(one.radians)
            b = ratio * math.sin(two.radians)
            return Unique(Triangle(one, two, rest, a, b, spec.side_c))
        ratio = spec.side1.value / math.sin(one.radians)
        b = ratio * math.sin(two.radians)
        c = ratio * math.sin(rest.radians)
        return Unique(Triangle(one, two, rest, spec.side1, b, c))
    except InputError:
        return _flat("the two angles leave no room for a third")


def solve_ssa(spec: SSA) -> SolveOutcome:
    """The ambiguous case: sides a, b and the angle alpha opposite a.

    With h = b sin(alpha), the altitude from C onto the ray that carries side
    c, and alpha acute: a below h reaches nothing (no solution); a equal to h
    within the collapse tolerance tau touches the ray once (the unique right
    triangle with beta = 90); a between h and b crosses it twice (two
    triangles); a at least b crosses once beyond A. For alpha of 90 degrees
    or more only a > b admits a triangle. tau = 1e-12 * max(a, b): closer to
    the tangent altitude than that, the two nominal solutions are numerically
    indistinguishable and collapse into the right triangle.
    """
    a, b, al = spec.side_a.value, spec.side_b.value, spec.alpha
    tau = DEGENERACY_RTOL * max(a, b)
    h = b * math.sin(al.radians)
    if al.degrees < 90.0:
        if a < h - tau:
            return NoSolution(
                f"side a = {a:g} is shorter than the altitude "
                f"h = b sin(alpha) = {h:g}; the side cannot reach the base"
            )
        if abs(a - h) <= tau:
            # tangent case: side a just touches, beta is a right angle
            gamma = Angle(90.0 - al.degrees)
            c = a * math.sin(gamma.radians) / math.sin(al.radians)
            return Unique(Triangle(al, Angle(90.0), gamma, spec.side_a, spec.side_b, c))
        beta1 = math.degrees(math.asin(h / a))
        first = _ssa_triangle(spec, beta1)
        if a < b - tau:
            second = None
            if beta1 - al.degrees > 0.0:
                try:
                    second = _ssa_triangle(spec, 180.0 - beta1)
                except InputError:
                    second = None  # flat at this precision; keep the real one
            if second is not None:
                return Two(first, second)
        return Unique(first)
    if a <= b:
        return NoSolution(
            f"alpha = {al.degrees:g} degrees is not acute, so side a must "
            f"exceed side b; got a = {a:g} <= b = {b:g}"
        )
    try:
        return Unique(_ssa_triangle(spec, math.degrees(math.asin(h / a))))
    except InputError:
        return _flat(f"side a = {a:g} exceeds b = {b:g} only marginally")


def _ssa_triangle(spec: SSA, beta_deg: float) -> Triangle:
    al = spec.alpha
    gamma_deg = 180.0 - al.degrees - beta_deg
    c = (
        spec.side_a.value
        * math.sin(math.radians(gamma_deg))
        / math.sin(al.radians)
    )
    return Triangle(al, Angle(beta_deg), Angle(gamma_deg), spec.side_a, spec.side_b, c)


def _clamped_acos_deg(x: float) -> float:
    # float noise can push a cosine a hair outside [-1, 1]
    return math.degrees(math.acos(min(1.0, max(-1.0, x))))


def solve_sas(spec: SAS) -> SolveOutcome:
    """Two sides and the included angle: third side by the law of cosines,
    both remaining angles by its arccos form, then the angle sum is
    renormalized to exactly 180 degrees.

    The third side uses the cancellation-free rewriting
    (a-b)^2 + 4ab sin^2(gamma/2) of a^2 + b^2 - 2ab cos(gamma), which keeps
    full precision for needle configurations (a close to b, gamma small).
    """
    a, b, ga = spec.side_a.value, spec.side_b.value, spec.included_gamma
    s = math.sin(0.5 * ga.radians)
    c = math.sqrt((a - b) * (a - b) + 4.0 * a * b * s * s)
    al_deg = _clamped_acos_deg((b * b + c * c - a * a) / (2.0 * b * c))
    be_deg = _clamped_acos_deg((a * a + c * c - b * b) / (2.0 * a * c))
    try:
        return Unique(Triangle(al_deg, be_deg, 180.0 - al_deg - be_deg, a, b, c))
    except InputError:
        return _flat(
            f"included angle {ga.degrees:g} degrees is too close to 0 or 180"
        )


def solve_sss(spec: SSS) -> SolveOutcome:
    """Three sides: every angle from the arccos form, largest angle first
    from the largest side, smallest recovered by subtraction."""
    sides = (spec.side_a.value, spec.side_b.value, spec.side_c.value)
    tau = DEGENERACY_RTOL * max(sides)
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        if sides[j] + sides[k] - sides[i] <= tau:
            return NoSolution(
                f"triangle inequality fails: {sides[j]:g} + {sides[k]:g} "
                f"does not exceed {sides[i]:g}"
            )
    order = sorted(range(3), key=lambda i: sides[i], reverse=True)
    degs = [0.0, 0.0, 0.0]
    for i in order[:2]:
        j, k = (i + 1) % 3, (i + 2) % 3
        degs[i] = _clamped_acos_deg(
            (sides[j] * sides[j] + sides[k] * sides[k] - sides[i] * sides[i])
            / (2.0 * sides[j] * sides[k])
        )
    degs[order[2]] = 180.0 - degs[order[0]] - degs[order[1]]
    try:
        return Unique(Triangle(degs[0], degs[1], degs[2], *sides))
    except InputError:
        return _flat("the sides pass the triangle inequality only marginally")
