"""Exact sparse operator algebra over Q(i) and generic Lie machinery."""

from .lie import (
    LieBasis,
    commutant_dim,
    coordinates,
    in_span,
    jacobi_holds,
    killing_form,
    lie_closure,
    same_span,
    span_dim,
)
from .linalg import SparseEchelon
from .scalar import HALF, I, ONE, ZERO, GaussianRational, as_scalar
from .sparse import (
    SparseOperator,
    add,
    adjoint,
    anticommutator,
    bracket,
    compose,
    grade_of,
    product,
    scale,
)

ExactScalar = GaussianRational

__all__ = [
    "ExactScalar",
    "GaussianRational",
    "HALF",
    "I",
    "LieBasis",
    "ONE",
    "SparseEchelon",
    "SparseOperator",
    "ZERO",
    "add",
    "adjoint",
    "anticommutator",
    "as_scalar",
    "bracket",
    "commutant_dim",
    "compose",
    "coordinates",
    "grade_of",
    "in_span",
    "jacobi_holds",
    "killing_form",
    "lie_closure",
    "product",
    "same_span",
    "scale",
    "span_dim",
]
