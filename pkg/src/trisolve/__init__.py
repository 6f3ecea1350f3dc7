"""Oblique-triangle solving with identity-residual certification.

Solves all five classical given-data cases (ASA, AAS, SSA, SAS, SSS),
including both triangles of the ambiguous SSA case, and certifies every
result against Mollweide's formulas in all six cyclic forms, the law of
tangents, the law of sines and the law of cosines. A numeric reconstruction
of the bisector construction behind the cosine identity is available as
reconstruct_proof_figure().

The identity kernels run on a compiled extension when it is available and on
a pure-Python twin otherwise; see trisolve._backend.
"""

from ._backend import backend_name
from .core import (
    AAS,
    ASA,
    ROTATIONS,
    SAS,
    SSA,
    SSS,
    Angle,
    Rotation,
    SideLength,
    Triangle,
    TriangleSpec,
    law_of_cosines_residual,
    law_of_sines_diameter,
    law_of_tangents_residual,
    mollweide_cos_residual,
    mollweide_sin_residual,
    relabeled,
    third_angle,
)
from .errors import DomainError, InputError, PreconditionError, TrisolveError
from .solver import (
    NoSolution,
    SolveOutcome,
    Two,
    Unique,
    solve,
    solve_asa_aas,
    solve_sas,
    solve_ssa,
    solve_sss,
)
from .verifier import (
    DEFAULT_TOLERANCE,
    ProofFigure,
    ResidualReport,
    reconstruct_proof_figure,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "AAS",
    "ASA",
    "Angle",
    "DEFAULT_TOLERANCE",
    "DomainError",
    "InputError",
    "NoSolution",
    "PreconditionError",
    "ProofFigure",
    "ROTATIONS",
    "ResidualReport",
    "Rotation",
    "SAS",
    "SSA",
    "SSS",
    "SideLength",
    "SolveOutcome",
    "Triangle",
    "TriangleSpec",
    "TrisolveError",
    "Two",
    "Unique",
    "backend_name",
    "law_of_cosines_residual",
    "law_of_sines_diameter",
    "law_of_tangents_residual",
    "mollweide_cos_residual",
    "mollweide_sin_residual",
    "reconstruct_proof_figure",
    "relabeled",
    "solve",
    "solve_asa_aas",
    "solve_sas",
    "solve_ssa",
    "solve_sss",
    "third_angle",
    "verify",
]
