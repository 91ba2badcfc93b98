"""
Number of components of the hyperelliptic locus at full level two.
"""

import logging
from math import factorial, prod

from ..core.errors import IntegrityError, UsageError

logger = logging.getLogger(__name__)


def hyperelliptic_component_count(genus: int) -> int:
    """
    ``2^(g^2) * prod_{j=1..g} (2^(2j) - 1) / (2g + 2)!``.

    The numerator is the order of the symplectic group over the two-element
    field and the denominator the order of the symmetric group on the
    Weierstrass points.

    Raises:
        UsageError: If ``genus < 2``.
        IntegrityError: If the division is not exact.
    """
    if genus < 2:
        raise UsageError(f"component count needs genus >= 2, got {genus}")
    numerator = 2 ** (genus * genus) * prod(2 ** (2 * j) - 1 for j in range(1, genus + 1))
    denominator = factorial(2 * genus + 2)
    count, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegrityError(f"component count for genus {genus} is not an integer ({numerator}/{denominator})")
    logger.debug(f"genus {genus}: {count} hyperelliptic components")
    return count
