"""
JSON rendering of presentations, quotients and exact rationals.

Rationals are strings, ``"4/3"`` or ``"-2"``, so no precision is lost.
Hall words render as nested brackets, e.g. ``"[[a1^0,b1^1],a2^1]"``.
Output uses sorted keys so identical inputs give identical bytes.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from ..freelie.algebra import LieElement
from .graded import GradedPresentation, GradedQuotient


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"p"`` or ``"p/q"``.

    Raises:
        ValueError: If the text is not an exact rational.
    """
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational string: {text!r}")
    return Fraction(text)


def format_vector(values: Sequence[Fraction]) -> List[str]:
    return [format_rational(x) for x in values]


def element_terms(elem: LieElement) -> List[List[str]]:
    """``[[coefficient, word], ...]`` in Hall order."""
    return [[format_rational(c), str(word)] for word, c in elem.items()]


def presentation_to_dict(p: GradedPresentation) -> Dict[str, Any]:
    return {
        "descriptor": dict(p.descriptor),
        "weight_floor": p.weight_floor,
        "hall_order": p.algebra.order.value,
        "alphabet": [{"label": g.label, "copy": g.copy, "weight": g.weight} for g in p.alphabet],
        "relations": [
            {"label": r.label, "weight": r.weight, "terms": element_terms(r.element)} for r in p.relations
        ],
    }


def dims_to_dict(dims: Dict[int, int]) -> Dict[str, int]:
    return {str(w): d for w, d in dims.items()}


def quotient_to_dict(q: GradedQuotient, include_presentation: bool = True) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "dims": dims_to_dict(q.graded_dims()),
        "bases": {str(w): [str(word) for word in q.component(w).basis_words] for w in q.weights()},
    }
    if include_presentation:
        out["presentation"] = presentation_to_dict(q.presentation)
    return out


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
