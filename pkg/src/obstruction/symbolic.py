"""
Symbolic section constraints.

The candidate ``u^j -> u^j + a_j u^0`` is expanded with ``a_1..a_n`` left as
unknowns: each relation image becomes a polynomial in the ``a_j`` with Lie
element coefficients, and every quotient coordinate of the residue becomes
a polynomial over QQ. The constraint set is the reduced lex Groebner basis
of those polynomials.

For ``n = 1`` the basis is a single univariate polynomial and its rational
roots are exact. For ``n >= 2`` the solver is partial: it evaluates the
``2n`` zeta candidates and, when the basis is zero-dimensional, lists the
rational solutions of the system.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from sympy import Integer, Rational, Symbol, discriminant, groebner, roots, solve_poly_system, symbols

from ..core.errors import UsageError
from ..freelie.algebra import FreeLieAlgebra, LieElement
from ..freelie.hall import HallWord
from .candidate import all_zeta_candidates
from .sequence import SequenceSpec
from .theta import THETA_WEIGHT

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
PolyElement = Dict[Monomial, LieElement]

SUPPORTED_FLOOR = -2


@dataclass
class SymbolicResult:
    """Constraint polynomials and solutions for one sequence."""

    sequence: Dict[str, Any]
    unknowns: List[str]
    residues: List[Dict[str, Any]] = field(default_factory=list)
    constraints: List[Any] = field(default_factory=list)
    exact: bool = True
    status: str = "solved"
    discriminant: Optional[Any] = None
    rational_solutions: Optional[List[Dict[str, str]]] = None
    candidate_checks: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sequence": self.sequence,
            "unknowns": self.unknowns,
            "residues": self.residues,
            "constraints": [str(c) for c in self.constraints],
            "solver": "exact" if self.exact else "partial",
            "status": self.status,
            "discriminant": None if self.discriminant is None else str(self.discriminant),
            "rational_solutions": self.rational_solutions,
            "candidate_checks": self.candidate_checks,
        }


def _add(algebra: FreeLieAlgebra, into: PolyElement, mono: Monomial, elem: LieElement) -> None:
    total = into.get(mono, algebra.zero()) + elem
    if total:
        into[mono] = total
    else:
        into.pop(mono, None)


def _poly_bracket(algebra: FreeLieAlgebra, x: PolyElement, y: PolyElement) -> PolyElement:
    out: PolyElement = {}
    for mx, ex in x.items():
        for my, ey in y.items():
            b = algebra.bracket(ex, ey)
            if b:
                _add(algebra, out, tuple(p + q for p, q in zip(mx, my)), b)
    return out


class _SymbolicSection:
    """The candidate map with unknown coefficients, on Hall words of the target."""

    def __init__(self, seq: SequenceSpec):
        self.seq = seq
        self.source = seq.source.algebra
        n = seq.n
        self._images: Dict[Any, PolyElement] = {}
        for gen in seq.target.alphabet:
            j = gen.copy
            unit = tuple(1 if k == j else 0 for k in range(1, n + 1))
            self._images[gen] = {
                (0,) * n: self.source.gen(gen.label, j),
                unit: self.source.gen(gen.label, 0),
            }
        self._cache: Dict[int, PolyElement] = {}

    def word(self, w: HallWord) -> PolyElement:
        cached = self._cache.get(w.index)
        if cached is not None:
            return cached
        if w.is_leaf:
            result = self._images[w.generator]
        else:
            result = _poly_bracket(self.source, self.word(w.left), self.word(w.right))
        self._cache[w.index] = result
        return result

    def __call__(self, elem: LieElement) -> PolyElement:
        out: PolyElement = {}
        for w, c in elem.items():
            for mono, e in self.word(w).items():
                _add(self.source, out, mono, c * e)
        return out


def _sympy_rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _monomial(unknowns: List[Symbol], mono: Monomial):
    term = Integer(1)
    for s, e in zip(unknowns, mono):
        if e:
            term = term * s ** e
    return term


def _evaluate(constraints: List[Any], unknowns: List[Symbol], point: Tuple[Fraction, ...]) -> bool:
    values = {s: _sympy_rational(v) for s, v in zip(unknowns, point)}
    return all(c.subs(values) == 0 for c in constraints)


def solve_sections_symbolic(seq: SequenceSpec, weight_floor: int = SUPPORTED_FLOOR) -> SymbolicResult:
    """
    Polynomial constraints on ``a_1..a_n`` for the candidate family of ``seq``.

    Raises:
        UsageError: If ``weight_floor`` is not -2 or the sequence is truncated
            above weight -2.
    """
    if weight_floor != SUPPORTED_FLOOR:
        raise UsageError(f"symbolic solving supports weight floor {SUPPORTED_FLOOR} only, got {weight_floor}")
    if seq.weight_floor > SUPPORTED_FLOOR:
        raise UsageError(f"sequence is truncated at {seq.weight_floor}; weight {SUPPORTED_FLOOR} is needed")
    n = seq.n
    names = [f"a{j}" for j in range(1, n + 1)]
    result = SymbolicResult(seq.descriptor(), names)
    if not seq.has_candidates:
        result.status = "no_candidates"
        result.rational_solutions = []
        return result

    unknowns = list(symbols(" ".join(names), seq=True))
    quotient = seq.source_quotient
    decomposition = seq.theta_decomposition
    section = _SymbolicSection(seq)
    polynomials = []
    for rel in seq.target.relations:
        if rel.weight != THETA_WEIGHT:
            continue
        dim = quotient.dimension(THETA_WEIGHT)
        coords = [Integer(0)] * dim
        theta: Dict[str, Any] = {key: Integer(0) for key in decomposition.keys}
        for mono, elem in section(rel.element).items():
            term = _monomial(unknowns, mono)
            vec = quotient.project(elem, THETA_WEIGHT)
            for k, c in enumerate(vec):
                if c:
                    coords[k] += _sympy_rational(c) * term
            for key, c in decomposition.theta_coordinates(vec).items():
                if c:
                    theta[key] += _sympy_rational(c) * term
        coords = [c.expand() for c in coords]
        polynomials.extend(c for c in coords if c != 0)
        result.residues.append(
            {
                "relation": rel.label,
                "coordinates": [str(c) for c in coords],
                "theta": {k: str(v.expand()) for k, v in theta.items()},
            }
        )

    if polynomials:
        basis = groebner(polynomials, *unknowns, order="lex", domain="QQ")
        constraints = list(basis.exprs)
        zero_dimensional = basis.is_zero_dimensional
    else:
        constraints = []
        zero_dimensional = False
    result.constraints = constraints
    inconsistent = len(constraints) == 1 and constraints[0] == 1

    for cand in all_zeta_candidates(n):
        satisfied = not inconsistent and _evaluate(constraints, unknowns, cand.coefficients)
        result.candidate_checks.append({"label": cand.label, "satisfies": satisfied})

    if n == 1:
        result.exact = True
        if inconsistent:
            result.rational_solutions = []
        elif not constraints:
            result.status = "unconstrained"
        else:
            poly = constraints[0]
            if poly.as_poly(unknowns[0]).degree() >= 2:
                result.discriminant = discriminant(poly, unknowns[0])
            found = roots(poly, unknowns[0], filter="Q")
            result.rational_solutions = [{names[0]: str(r)} for r in sorted(found, key=lambda r: Fraction(int(r.p), int(r.q)))]
    else:
        result.exact = False
        if inconsistent:
            result.rational_solutions = []
        elif not constraints:
            result.status = "unconstrained"
        elif zero_dimensional:
            try:
                solutions = solve_poly_system(constraints, *unknowns) or []
                result.rational_solutions = [
                    {name: str(value) for name, value in zip(names, point)}
                    for point in solutions
                    if all(value.is_rational for value in point)
                ]
            except NotImplementedError as e:
                logger.warning(f"solve_poly_system gave up: {e}")
        else:
            logger.warning(f"{seq.kind.value}(n={n}): constraint set is not zero-dimensional; only candidates were tested")
    if result.rational_solutions is not None and not result.rational_solutions and result.status == "solved":
        result.status = "no_rational_solutions"
    logger.info(f"Symbolic solve {seq.kind.value}(g={seq.genus}, n={n}): {len(constraints)} constraints, {result.status}")
    return result
