"""
Unit tests for graded presentations, quotients and the built-in families.
"""

import json
import unittest
from fractions import Fraction

from src.core.errors import UsageError
from src.exactla import rank
from src.freelie import HallOrder
from src.presentation import (
    PresentationKind,
    build_quotient,
    builtin_presentation,
    check_relations_stable,
    graded_dims,
    hain_config,
    ideal_component,
    labute,
    labute_dimension,
    partial_config,
    project,
    punctured_surface,
    quotient_representation,
)
from src.presentation.equivariance import quotient_action
from src.presentation.serialization import dumps, format_rational, parse_rational, presentation_to_dict, quotient_to_dict
from src.symplectic import sp_generators, theta


def surface_dim(genus):
    return 2 * genus * genus - genus - 1


class TestLabute(unittest.TestCase):
    """Test cases for the closed surface presentation."""

    def test_low_weights(self):
        for genus in (2, 3):
            dims = build_quotient(labute(genus, weight_floor=-2)).graded_dims()
            self.assertEqual(dims, {-1: 2 * genus, -2: surface_dim(genus)})

    def test_known_values(self):
        self.assertEqual(labute_dimension(2, 2), 5)
        self.assertEqual(labute_dimension(3, 2), 14)
        self.assertEqual([labute_dimension(2, k) for k in range(1, 5)], [4, 5, 16, 45])
        self.assertEqual(labute_dimension(3, 3), 64)

    def test_matches_closed_formula_to_weight_four(self):
        q = build_quotient(labute(2, weight_floor=-4))
        for k in range(1, 5):
            self.assertEqual(q.dimension(-k), labute_dimension(2, k))

    def test_matches_closed_formula_genus_three(self):
        q = build_quotient(labute(3, weight_floor=-3))
        self.assertEqual([q.dimension(-k) for k in (1, 2, 3)], [6, 14, 64])

    def test_ideal_component(self):
        p = labute(2, weight_floor=-2)
        self.assertEqual(ideal_component(p, -2).rank, 1)
        self.assertEqual(ideal_component(p, -1).rank, 0)


class TestConfigurationPresentations(unittest.TestCase):
    """Test cases for the configuration-space presentations."""

    def test_hain_dims(self):
        for genus in (2, 3):
            for n in (1, 2, 3):
                with self.subTest(genus=genus, n=n):
                    dims = build_quotient(hain_config(genus, n, weight_floor=-2)).graded_dims()
                    self.assertEqual(dims[-1], 2 * genus * n)
                    self.assertEqual(dims[-2], n * surface_dim(genus) + n * (n - 1) // 2)

    def test_hain_fiber_differences(self):
        for genus in (2, 3):
            previous = build_quotient(hain_config(genus, 1, weight_floor=-2)).graded_dims()
            for n in (1, 2):
                current = build_quotient(hain_config(genus, n + 1, weight_floor=-2)).graded_dims()
                self.assertEqual(current[-1] - previous[-1], 2 * genus)
                self.assertEqual(current[-2] - previous[-2], surface_dim(genus) + n)
                previous = current

    def test_hain_genus_two_pair_known_dims(self):
        q = build_quotient(hain_config(2, 2, weight_floor=-2))
        self.assertEqual(q.graded_dims(), {-1: 8, -2: 11})
        self.assertEqual(q.component(-2).ideal.rank, 28 - 11)

    def test_punctured_dims(self):
        for genus in (2, 3):
            for n in (1, 2, 3):
                with self.subTest(genus=genus, n=n):
                    dims = build_quotient(punctured_surface(genus, n, weight_floor=-2)).graded_dims()
                    self.assertEqual(dims[-1], 2 * genus)
                    self.assertEqual(dims[-2], surface_dim(genus) + n)

    def test_partial_config_kills_theta_pairs(self):
        full = build_quotient(partial_config(2, 2, [], weight_floor=-2)).graded_dims()
        one = build_quotient(partial_config(2, 2, [2], weight_floor=-2)).graded_dims()
        both = build_quotient(partial_config(2, 2, [1, 2], weight_floor=-2)).graded_dims()
        self.assertEqual(full, build_quotient(hain_config(2, 3, weight_floor=-2)).graded_dims())
        self.assertEqual(one[-2], full[-2] - 1)
        self.assertEqual(both[-2], full[-2] - 2)

    def test_relation_labels(self):
        p = hain_config(2, 2, weight_floor=-2)
        labels = [r.label for r in p.relations]
        self.assertEqual(labels[:2], ["theta[1]", "theta[2]"])
        self.assertIn("sym[a1,b1,1,2]", labels)
        self.assertIn("pair[a1,b1,2,1]", labels)
        self.assertEqual(p.relation("theta[1]").weight, -2)

    def test_without_relation(self):
        p = labute(2, weight_floor=-2).without("theta[0]")
        self.assertEqual(build_quotient(p).dimension(-2), 6)
        with self.assertRaises(KeyError):
            p.without("theta[0]")


class TestBuiltinPresentation(unittest.TestCase):
    """Test cases for builtin_presentation and its validation."""

    def test_kind_aliases(self):
        self.assertIs(PresentationKind.from_string("hain"), PresentationKind.HAIN_CONFIG)
        self.assertIs(PresentationKind.from_string("punctured-surface"), PresentationKind.PUNCTURED_SURFACE)
        with self.assertRaises(UsageError):
            PresentationKind.from_string("sphere")

    def test_dispatch(self):
        p = builtin_presentation("hain", 2, 2, weight_floor=-2)
        self.assertEqual(p.descriptor["kind"], "hain_config")
        self.assertEqual(p.descriptor["copies"], [1, 2])

    def test_invalid_combinations(self):
        with self.assertRaises(UsageError):
            builtin_presentation("hain", 1, 2, weight_floor=-2)
        with self.assertRaises(UsageError):
            builtin_presentation("hain", 2, 0, weight_floor=-2)
        with self.assertRaises(UsageError):
            builtin_presentation("labute", 2, filled=[1], weight_floor=-2)
        with self.assertRaises(UsageError):
            builtin_presentation("partial", 2, 2, filled=[3], weight_floor=-2)


class TestQuotientOperations(unittest.TestCase):
    """Test cases for projection, lifting and structure constants."""

    @classmethod
    def setUpClass(cls):
        cls.quotient = build_quotient(hain_config(2, 2, weight_floor=-2))

    def test_project_kills_relations(self):
        for rel in self.quotient.presentation.relations:
            self.assertTrue(self.quotient.kills(rel.element), rel.label)

    def test_project_kills_translated_relations(self):
        action = quotient_action(self.quotient)
        for _, m in sp_generators(2).items():
            for rel in self.quotient.presentation.relations:
                self.assertTrue(self.quotient.kills(action.act(m, rel.element)))

    def test_relations_stable(self):
        self.assertTrue(check_relations_stable(self.quotient))

    def test_lift_then_project(self):
        coords = tuple(Fraction(i, 3) for i in range(self.quotient.dimension(-2)))
        self.assertEqual(project(self.quotient, self.quotient.lift(coords, -2)), coords)

    def test_project_zero_needs_weight(self):
        zero = self.quotient.algebra.zero()
        with self.assertRaises(ValueError):
            self.quotient.project(zero)
        self.assertEqual(self.quotient.project(zero, -2), (Fraction(0),) * 11)

    def test_symmetric_pairs_equal_in_quotient(self):
        algebra = self.quotient.algebra
        space = self.quotient.presentation.space
        left = algebra.bracket(algebra.gen("a1", 1), algebra.gen("b2", 2))
        right = algebra.bracket(algebra.gen("a1", 2), algebra.gen("b2", 1))
        self.assertNotEqual(left, right)
        self.assertEqual(self.quotient.project(left), self.quotient.project(right))
        self.assertIsNotNone(space)

    def test_theta_relation_in_quotient(self):
        algebra = self.quotient.algebra
        space = self.quotient.presentation.space
        t1 = self.quotient.project(theta(space, algebra, 1))
        self.assertTrue(any(t1))

    def test_antisymmetry_and_jacobi(self):
        self.assertTrue(self.quotient.check_antisymmetry())
        self.assertTrue(self.quotient.check_jacobi())

    def test_jacobi_at_weight_three(self):
        q = build_quotient(labute(2, weight_floor=-3))
        self.assertTrue(q.check_antisymmetry())
        self.assertTrue(q.check_jacobi())

    def test_structure_constants_shape(self):
        table = self.quotient.structure_constants(-1, -1)
        self.assertEqual(len(table), 8 * 8)
        self.assertTrue(all(len(v) == 11 for v in table.values()))
        self.assertEqual(self.quotient.structure_constants(-1, -2), {})

    def test_projection_matrix(self):
        comp = self.quotient.component(-2)
        self.assertEqual(comp.free_dimension, 28)
        m = self.quotient.projection_matrix(-2)
        self.assertEqual(m.shape, (11, 28))
        self.assertEqual(rank(m), 11)

    def test_graded_dims_function(self):
        self.assertEqual(graded_dims(self.quotient), {-1: 8, -2: 11})

    def test_quotient_representation(self):
        gens = sp_generators(2)
        rep = quotient_representation(self.quotient, -1, gens)
        self.assertEqual(rep.dim, 8)
        # copies of H, so the induced matrices are the block sums of the generators
        for m, induced in zip(gens.matrices, rep.matrices):
            self.assertEqual(induced[0, 0], m[0, 0])

    def test_hall_order_does_not_change_dims(self):
        reversed_q = build_quotient(hain_config(2, 2, weight_floor=-2, order=HallOrder.REVERSED))
        self.assertEqual(reversed_q.graded_dims(), self.quotient.graded_dims())


class TestSerialization(unittest.TestCase):
    """Test cases for JSON rendering."""

    def test_rationals(self):
        self.assertEqual(format_rational(Fraction(4, 3)), "4/3")
        self.assertEqual(format_rational(Fraction(-2)), "-2")
        self.assertEqual(parse_rational("-8/3"), Fraction(-8, 3))
        with self.assertRaises(ValueError):
            parse_rational("1.5")
        with self.assertRaises(ValueError):
            parse_rational("1e3")

    def test_deterministic_output(self):
        first = dumps(quotient_to_dict(build_quotient(labute(2, weight_floor=-2))))
        second = dumps(quotient_to_dict(build_quotient(labute(2, weight_floor=-2))))
        self.assertEqual(first, second)

    def test_presentation_schema(self):
        data = json.loads(dumps(presentation_to_dict(labute(1, weight_floor=-2))))
        self.assertEqual(data["hall_order"], "standard")
        self.assertEqual(data["alphabet"][0], {"label": "a1", "copy": 0, "weight": -1})
        self.assertEqual(data["relations"], [{"label": "theta[0]", "weight": -2, "terms": [["1", "[a1^0,b1^0]"]]}])

    def test_dims_keys(self):
        data = json.loads(dumps(quotient_to_dict(build_quotient(labute(2, weight_floor=-2)), include_presentation=False)))
        self.assertEqual(data["dims"], {"-1": 4, "-2": 5})
        self.assertEqual(len(data["bases"]["-2"]), 5)


if __name__ == "__main__":
    unittest.main()
