"""Triangle domain types and the identity evaluators used to certify them.

Angles are degrees at every public boundary and radians only inside the
trigonometric kernels; the degree/radian conversion is centralized in Angle.
Labeling convention throughout: angles alpha, beta, gamma sit opposite sides
a, b, c respectively, and the three (angle, side) pairs rotate together.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError, InputError

# Gate tolerances for Triangle construction. Deliberately loose compared to
# verification tolerances: parts rounded to two decimals or mistyped in one
# digit must still construct (and then fail verification), while parts that
# cannot describe any triangle at all are rejected as input errors.
ANGLE_SUM_TOL_DEG = 0.1
SINES_CONSISTENCY_RTOL = 0.05
ORDER_ANGLE_TOL_DEG = 0.1
ORDER_SIDE_RTOL = 1e-3

# Scale-relative cutoff below which a configuration counts as flat/degenerate.
DEGENERACY_RTOL = 1e-12


@dataclass(frozen=True)
class Angle:
    """A planar angle, stored and displayed in degrees."""

    degrees: float

    def __post_init__(self):
        object.__setattr__(self, "degrees", float(self.degrees))
        if not math.isfinite(self.degrees):
            raise InputError(f"angle must be finite, got {self.degrees!r}")

    @classmethod
    def from_radians(cls, value: float) -> "Angle":
        return cls(math.degrees(value))

    @property
    def radians(self) -> float:
        return math.radians(self.degrees)

    def is_interior(self) -> bool:
        """True when usable as a triangle interior angle: strictly in (0, 180)."""
        return 0.0 < self.degrees < 180.0


@dataclass(frozen=True)
class SideLength:
    """A side length in an arbitrary consistent unit; strictly positive."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        if not (math.isfinite(self.value) and self.value > 0.0):
            raise InputError(
                f"side length must be finite and positive, got {self.value!r}"
            )


def _angle(value, name: str) -> Angle:
    try:
        return value if isinstance(value, Angle) else Angle(value)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{name} is not a valid angle: {value!r}") from exc


def _interior(value, name: str) -> Angle:
    ang = _angle(value, name)
    if not ang.is_interior():
        raise InputError(
            f"{name} must lie strictly between 0 and 180 degrees, "
            f"got {ang.degrees:g}"
        )
    return ang


def _side(value, name: str) -> SideLength:
    try:
        return value if isinstance(value, SideLength) else SideLength(value)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"{name} is not a valid side length: {value!r}") from exc


@dataclass(frozen=True)
class Triangle:
    """The six parts of a valid triangle.

    Validation is eager and total: there is no way to hold a Triangle whose
    parts are non-finite, whose angles do not sum to 180 degrees (within the
    construction gate), whose sides break the law of sines grossly or the
    strict triangle inequality, or whose side order contradicts its angle
    order. Numbers are accepted anywhere an Angle or SideLength is expected.
    """

    alpha: Angle
    beta: Angle
    gamma: Angle
    a: SideLength
    b: SideLength
    c: SideLength

    def __post_init__(self):
        object.__setattr__(self, "alpha", _interior(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _interior(self.beta, "beta"))
        object.__setattr__(self, "gamma", _interior(self.gamma, "gamma"))
        object.__setattr__(self, "a", _side(self.a, "a"))
        object.__setattr__(self, "b", _side(self.b, "b"))
        object.__setattr__(self, "c", _side(self.c, "c"))
        self._validate()

    def _validate(self):
        angles = (self.alpha.degrees, self.beta.degrees, self.gamma.degrees)
        sides = (self.a.value, self.b.value, self.c.value)
        total = angles[0] + angles[1] + angles[2]
        if abs(total - 180.0) > ANGLE_SUM_TOL_DEG:
            raise InputError(
                f"angles sum to {total:g} degrees; a triangle needs 180"
            )
        scale = max(sides)
        tau = DEGENERACY_RTOL * scale
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            if sides[j] + sides[k] - sides[i] <= tau:
                raise InputError(
                    "triangle inequality violated: "
                    f"{sides[j]:g} + {sides[k]:g} must exceed {sides[i]:g}"
                )
        ra, rb, rc = kernels.sines_ratios(*self.radian_parts())
        mean = (ra + rb + rc) / 3.0
        if (max(ra, rb, rc) - min(ra, rb, rc)) / mean > SINES_CONSISTENCY_RTOL:
            raise InputError(
                "sides and angles are inconsistent: the three side/sin(angle) "
                f"ratios {ra:g}, {rb:g}, {rc:g} disagree beyond the "
                f"{SINES_CONSISTENCY_RTOL:.0%} construction gate"
            )
        names = ("alpha", "beta", "gamma")
        for i in range(3):
            for j in range(3):
                if (
                    angles[i] > angles[j] + ORDER_ANGLE_TOL_DEG
                    and sides[i] < sides[j] - ORDER_SIDE_RTOL * scale
                ):
                    raise InputError(
                        f"{names[i]} exceeds {names[j]} but its opposite side "
                        "is shorter; the larger side must face the larger angle"
                    )

    @property
    def parts(self) -> tuple[float, float, float, float, float, float]:
        """(alpha, beta, gamma) in degrees followed by (a, b, c)."""
        return (
            self.alpha.degrees,
            self.beta.degrees,
            self.gamma.degrees,
            self.a.value,
            self.b.value,
            self.c.value,
        )

    def radian_parts(self) -> tuple[float, float, float, float, float, float]:
        """(alpha, beta, gamma) in radians followed by (a, b, c)."""
        return (
            self.alpha.radians,
            self.beta.radians,
            self.gamma.radians,
            self.a.value,
            self.b.value,
            self.c.value,
        )


class TriangleSpec:
    """Base class for the five classical given-data cases."""

    __slots__ = ()


@dataclass(frozen=True)
class ASA(TriangleSpec):
    """Two angles and the included side: the angle at A, side c = AB, the
    angle at B."""

    angle_a: Angle
    side_c: SideLength
    angle_b: Angle

    def __post_init__(self):
        object.__setattr__(self, "angle_a", _interior(self.angle_a, "angle_a"))
        object.__setattr__(self, "side_c", _side(self.side_c, "side_c"))
        object.__setattr__(self, "angle_b", _interior(self.angle_b, "angle_b"))


@dataclass(frozen=True)
class AAS(TriangleSpec):
    """Two angles and a side opposite the first of them."""

    angle1: Angle
    angle2: Angle
    side1: SideLength

    def __post_init__(self):
        object.__setattr__(self, "angle1", _interior(self.angle1, "angle1"))
        object.__setattr__(self, "angle2", _interior(self.angle2, "angle2"))
        object.__setattr__(self, "side1", _side(self.side1, "side1"))


@dataclass(frozen=True)
class SSA(TriangleSpec):
    """Two sides and the angle opposite the first: a, b and alpha (the
    ambiguous case)."""

    side_a: SideLength
    side_b: SideLength
    alpha: Angle

    def __post_init__(self):
        object.__setattr__(self, "side_a", _side(self.side_a, "side_a"))
        object.__setattr__(self, "side_b", _side(self.side_b, "side_b"))
        object.__setattr__(self, "alpha", _interior(self.alpha, "alpha"))


@dataclass(frozen=True)
class SAS(TriangleSpec):
    """Two sides and the included angle: a, gamma, b."""

    side_a: SideLength
    included_gamma: Angle
    side_b: SideLength

    def __post_init__(self):
        object.__setattr__(self, "side_a", _side(self.side_a, "side_a"))
        object.__setattr__(
            self, "included_gamma", _interior(self.included_gamma, "included_gamma")
        )
        object.__setattr__(self, "side_b", _side(self.side_b, "side_b"))


@dataclass(frozen=True)
class SSS(TriangleSpec):
    """All three sides."""

    side_a: SideLength
    side_b: SideLength
    side_c: SideLength

    def __post_init__(self):
        object.__setattr__(self, "side_a", _side(self.side_a, "side_a"))
        object.__setattr__(self, "side_b", _side(self.side_b, "side_b"))
        object.__setattr__(self, "side_c", _side(self.side_c, "side_c"))


def relabeled(t: Triangle, perm: tuple[int, int, int]) -> Triangle:
    """Relabel the (angle, side) pairs of a triangle.

    perm[i] names the old pair that becomes pair i, with pairs indexed
    ((alpha, a), (beta, b), (gamma, c)). Every permutation of a valid
    triangle is again valid.
    """
    if sorted(perm) != [0, 1, 2]:
        raise InputError(f"not a permutation of (0, 1, 2): {perm!r}")
    angles = (t.alpha, t.beta, t.gamma)
    sides = (t.a, t.b, t.c)
    i, j, k = perm
    return Triangle(angles[i], angles[j], angles[k], sides[i], sides[j], sides[k])


@dataclass(frozen=True)
class Rotation:
    """Cyclic relabeling (alpha, beta, gamma, a, b, c) -> (beta, gamma, alpha,
    b, c, a), applied ``index`` times.

    Every identity evaluator takes a Rotation so the three cyclic forms share
    one code path: rotation k on a triangle is, bit for bit, the base form on
    the triangle relabeled k times.
    """

    index: int = 0

    def __post_init__(self):
        if self.index not in (0, 1, 2):
            raise InputError(f"rotation index must be 0, 1 or 2, got {self.index!r}")

    def apply(self, t: Triangle) -> Triangle:
        k = self.index
        return relabeled(t, (k, (k + 1) % 3, (k + 2) % 3))


ROTATIONS = (Rotation(0), Rotation(1), Rotation(2))


def _rotated_radian_parts(t: Triangle, k: int):
    al, be, ga, a, b, c = t.radian_parts()
    angles = (al, be, ga)
    sides = (a, b, c)
    return (
        angles[k],
        angles[(k + 1) % 3],
        angles[(k + 2) % 3],
        sides[k],
        sides[(k + 1) % 3],
        sides[(k + 2) % 3],
    )


def third_angle(x, y) -> Angle:
    """The angle completing x and y to 180 degrees, guaranteed interior.

    Raises DomainError when x + y already reaches 180 degrees, since no
    triangle has a third angle then.
    """
    xa = _interior(x, "x")
    ya = _interior(y, "y")
    rest = 180.0 - xa.degrees - ya.degrees
    if rest <= 0.0:
        raise DomainError(
            f"angles {xa.degrees:g} and {ya.degrees:g} sum to 180 degrees or "
            "more; no valid triangle remains"
        )
    return Angle(rest)


def mollweide_sin_residual(t: Triangle, rotation: Rotation = ROTATIONS[0]) -> float:
    """LHS - RHS of sin((alpha-beta)/2) / cos(gamma/2) = (a-b)/c under the
    given cyclic relabeling."""
    lhs, rhs = kernels.mollweide_sin_parts(*_rotated_radian_parts(t, rotation.index))
    return lhs - rhs


def mollweide_cos_residual(t: Triangle, rotation: Rotation = ROTATIONS[0]) -> float:
    """LHS - RHS of cos((alpha-beta)/2) / sin(gamma/2) = (a+b)/c under the
    given cyclic relabeling."""
    lhs, rhs = kernels.mollweide_cos_parts(*_rotated_radian_parts(t, rotation.index))
    return lhs - rhs


def law_of_tangents_residual(t: Triangle, rotation: Rotation = ROTATIONS[0]) -> float:
    """LHS - RHS of tan((alpha-beta)/2) / tan((alpha+beta)/2) = (a-b)/(a+b).

    tan((alpha+beta)/2) is the cotangent of gamma/2 rewritten through the
    angle sum, so nothing blows up as gamma approaches 180 degrees.
    """
    lhs, rhs = kernels.law_of_tangents_parts(
        *_rotated_radian_parts(t, rotation.index)
    )
    return lhs - rhs


def law_of_cosines_residual(t: Triangle, rotation: Rotation = ROTATIONS[0]) -> float:
    """c^2 - (a^2 + b^2 - 2ab cos(gamma)) under the given cyclic relabeling.

    Scales with the square of the triangle scale; divide by c^2 for a
    scale-free figure (the verifier does).
    """
    lhs, rhs = kernels.law_of_cosines_parts(*_rotated_radian_parts(t, rotation.index))
    return lhs - rhs


def law_of_sines_diameter(t: Triangle) -> float:
    """The common law-of-sines ratio a/sin(alpha), i.e. the circumdiameter."""
    return t.a.value / math.sin(t.alpha.radians)
