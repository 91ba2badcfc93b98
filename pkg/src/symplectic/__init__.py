"""
Symplectic module H, its copies, the symplectic group action and
representation-theoretic helpers.
"""

from .counting import hyperelliptic_component_count
from .schur import Representation, copies, direct_sum, equivariant_maps, schur_table, standard, trivial
from .space import (
    CopyAction,
    SpGeneratorSet,
    SymplecticSpace,
    act,
    handle_rotation,
    sp_generators,
    theta,
    theta_pair,
    transvection,
)

__all__ = [
    "CopyAction",
    "Representation",
    "SpGeneratorSet",
    "SymplecticSpace",
    "act",
    "copies",
    "direct_sum",
    "equivariant_maps",
    "handle_rotation",
    "hyperelliptic_component_count",
    "schur_table",
    "sp_generators",
    "standard",
    "theta",
    "theta_pair",
    "transvection",
    "trivial",
]
