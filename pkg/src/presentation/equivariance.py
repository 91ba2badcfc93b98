"""
Symplectic action on graded quotients.
"""

import logging
from typing import List, Optional, Tuple

from ..exactla.matrix import Mat
from ..symplectic.schur import Representation
from ..symplectic.space import CopyAction, SpGeneratorSet, sp_generators
from .graded import GradedQuotient

logger = logging.getLogger(__name__)


def quotient_action(quotient: GradedQuotient) -> CopyAction:
    space = quotient.presentation.space
    if space is None:
        raise ValueError("presentation has no symplectic space attached")
    return CopyAction(space, quotient.algebra)


def induced_action(quotient: GradedQuotient, action: CopyAction, matrix: Mat, weight: int) -> Mat:
    """Matrix of ``matrix`` acting on the weight-``weight`` quotient coordinates."""
    dim = quotient.dimension(weight)
    columns = []
    for e in quotient.basis(weight):
        columns.append(quotient.project(action.act(matrix, e), weight))
    return Mat.from_columns(columns, dim)


def quotient_representation(
    quotient: GradedQuotient, weight: int, generators: Optional[SpGeneratorSet] = None
) -> Representation:
    """The graded piece at ``weight`` as a representation of the symplectic generators."""
    action = quotient_action(quotient)
    gens = generators or sp_generators(action.space.genus)
    matrices = tuple(induced_action(quotient, action, m, weight) for m in gens)
    return Representation(f"Gr{weight}", quotient.dimension(weight), matrices)


def unstable_relations(
    quotient: GradedQuotient, generators: Optional[SpGeneratorSet] = None
) -> List[Tuple[str, str]]:
    """
    Pairs ``(generator name, relation label)`` for which ``act(M, r)`` does
    not lie in the ideal. An empty list means the ideal is stable.
    """
    action = quotient_action(quotient)
    gens = generators or sp_generators(action.space.genus)
    failures = []
    for name, m in gens.items():
        for rel in quotient.presentation.relations:
            if not quotient.kills(action.act(m, rel.element)):
                failures.append((name, rel.label))
    if failures:
        logger.warning(f"{len(failures)} relation images leave the ideal")
    return failures


def check_relations_stable(quotient: GradedQuotient, generators: Optional[SpGeneratorSet] = None) -> bool:
    return not unstable_relations(quotient, generators)
