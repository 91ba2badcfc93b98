"""
Finitely presented weight-graded Lie algebras and the built-in families.
"""

from .builtin import (
    PresentationKind,
    builtin_presentation,
    hain_config,
    labute,
    labute_dimension,
    partial_config,
    punctured_surface,
)
from .equivariance import check_relations_stable, induced_action, quotient_representation, unstable_relations
from .graded import (
    GradedPresentation,
    GradedQuotient,
    Relation,
    build_quotient,
    graded_dims,
    ideal_component,
    project,
)

__all__ = [
    "GradedPresentation",
    "GradedQuotient",
    "PresentationKind",
    "Relation",
    "build_quotient",
    "builtin_presentation",
    "check_relations_stable",
    "graded_dims",
    "hain_config",
    "ideal_component",
    "induced_action",
    "labute",
    "labute_dimension",
    "partial_config",
    "project",
    "punctured_surface",
    "quotient_representation",
    "unstable_relations",
]
