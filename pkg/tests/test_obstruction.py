"""
Unit tests for sequences, section candidates, residues and certificates.
"""

import json
import os
import tempfile
import unittest
from fractions import Fraction

from sympy import expand, symbols

from src.core.errors import UsageError
from src.freelie import HallOrder
from src.obstruction import (
    OBSTRUCTED,
    SPLITS,
    SequenceKind,
    all_zeta_candidates,
    builtin_sequence,
    candidate_from_coefficients,
    certificate_to_dict,
    certificate_to_json,
    check_all,
    check_section,
    composes_to_identity,
    is_equivariant,
    load_certificate,
    parse_zeta,
    solve_sections_symbolic,
    symbolic_candidate,
    verify_certificate,
    verify_projection,
    zeta_candidate,
)
from src.obstruction.theta import theta_key


class TestSequences(unittest.TestCase):
    """Test cases for the built-in sequences."""

    def test_kind_names(self):
        self.assertIs(SequenceKind.from_string("beta-o"), SequenceKind.BETA_O)
        self.assertIs(SequenceKind.from_string("BETA_PRIME"), SequenceKind.BETA_PRIME)
        with self.assertRaises(UsageError):
            SequenceKind.from_string("beta")

    def test_filled_sets(self):
        self.assertEqual(SequenceKind.BETA_O.filled(3), [])
        self.assertEqual(SequenceKind.BETA_PRIME.filled(3), [2, 3])
        self.assertEqual(SequenceKind.BETA_HAT.filled(3), [1, 2, 3])

    def test_projection_respects_relations(self):
        for kind in SequenceKind:
            seq = builtin_sequence(kind, 2, 2)
            self.assertTrue(verify_projection(seq))

    def test_projection_negative_control(self):
        seq = builtin_sequence("beta_o", 2, 1)
        broken = seq.with_target(seq.target.without("theta[1]"))
        self.assertFalse(verify_projection(broken))

    def test_source_dims(self):
        self.assertEqual(builtin_sequence("beta_hat", 2, 1).source_quotient.dimension(-2), 10)
        self.assertEqual(builtin_sequence("beta_o", 2, 1).source_quotient.dimension(-2), 11)

    def test_invalid_parameters(self):
        with self.assertRaises(UsageError):
            builtin_sequence("beta_o", 1, 1)
        with self.assertRaises(UsageError):
            builtin_sequence("beta_prime", 2, 0)

    def test_zero_copies(self):
        seq = builtin_sequence("beta_o", 2, 0)
        self.assertFalse(seq.has_candidates)
        self.assertEqual(check_all(seq, []), [])
        self.assertEqual(certificate_to_dict(seq, [])["status"], "no_candidates")

    def test_theta_keys(self):
        seq = builtin_sequence("beta_prime", 2, 2)
        self.assertEqual(seq.theta_decomposition.keys, ("01", "12"))
        self.assertEqual(theta_key(0, 12), "0,12")


class TestCandidates(unittest.TestCase):
    """Test cases for section candidates."""

    def test_zeta(self):
        cand = zeta_candidate(2, "-", 3)
        self.assertEqual(cand.coefficients, (Fraction(0), Fraction(-1), Fraction(0)))
        self.assertEqual(cand.label, "zeta_2-")
        self.assertEqual(parse_zeta("1+", 2).coefficients, (Fraction(1), Fraction(0)))

    def test_zeta_errors(self):
        with self.assertRaises(UsageError):
            parse_zeta("x", 2)
        with self.assertRaises(UsageError):
            zeta_candidate(3, "+", 2)

    def test_all_zeta_order(self):
        self.assertEqual([c.label for c in all_zeta_candidates(2)], ["zeta_1+", "zeta_1-", "zeta_2+", "zeta_2-"])

    def test_explicit_coefficients(self):
        cand = candidate_from_coefficients(["1", "-1/2"])
        self.assertEqual(cand.label, "a=(1,-1/2)")
        self.assertEqual(cand.display_coefficients(), ["1", "-1/2"])
        with self.assertRaises(UsageError):
            candidate_from_coefficients(["one"])

    def test_symbolic_candidate_is_not_concrete(self):
        seq = builtin_sequence("beta_o", 2, 1)
        cand = symbolic_candidate(1)
        self.assertFalse(cand.is_concrete)
        with self.assertRaises(UsageError):
            cand.induced_map(seq)

    def test_length_mismatch(self):
        seq = builtin_sequence("beta_o", 2, 1)
        with self.assertRaises(UsageError):
            check_section(seq, zeta_candidate(1, "+", 2))

    def test_composes_to_identity_and_equivariant(self):
        seq = builtin_sequence("beta_o", 2, 2)
        for cand in all_zeta_candidates(2) + [candidate_from_coefficients(["1/3", "-2"])]:
            self.assertTrue(composes_to_identity(seq, cand))
            self.assertTrue(is_equivariant(seq, cand))


class TestPuncturedFamily(unittest.TestCase):
    """Residues for the family with all points distinct."""

    def test_one_point_values(self):
        expected = {2: ("1", "-3"), 3: ("4/3", "-8/3")}
        for genus, (plus, minus) in expected.items():
            seq = builtin_sequence("beta_o", genus, 1)
            reports = check_all(seq, all_zeta_candidates(1))
            self.assertEqual([r.candidate.label for r in reports], ["zeta_1+", "zeta_1-"])
            self.assertEqual(reports[0].theta_coordinate("01", "theta[1]"), Fraction(plus))
            self.assertEqual(reports[1].theta_coordinate("01", "theta[1]"), Fraction(minus))
            self.assertTrue(all(r.verdict == OBSTRUCTED for r in reports))

    def test_general_coefficient(self):
        # coefficient of Theta_01 is 2a - (1 + a^2)/g
        seq = builtin_sequence("beta_o", 3, 1)
        for a in (Fraction(0), Fraction(1, 2), Fraction(-3)):
            report = check_section(seq, candidate_from_coefficients([a]))
            self.assertEqual(report.theta_coordinate("01"), 2 * a - (1 + a * a) / 3)

    def test_every_zeta_obstructed(self):
        for genus in (2, 3):
            for n in (1, 2, 3):
                with self.subTest(genus=genus, n=n):
                    seq = builtin_sequence("beta_o", genus, n)
                    reports = check_all(seq, all_zeta_candidates(n))
                    self.assertEqual(len(reports), 2 * n)
                    self.assertTrue(all(r.obstructed for r in reports))

    def test_second_copy(self):
        seq = builtin_sequence("beta_o", 2, 2)
        report = check_section(seq, parse_zeta("2+", 2))
        self.assertEqual(report.theta_coordinate("02"), Fraction(1))

    def test_witness(self):
        report = check_section(builtin_sequence("beta_o", 3, 1), parse_zeta("1+", 1))
        self.assertEqual(report.witness, {"relation": "theta[1]", "theta": "01", "value": "4/3"})
        self.assertFalse(report.residue("theta[1]").complement_nonzero)

    def test_floor_deeper_than_sequence(self):
        seq = builtin_sequence("beta_o", 2, 1)
        with self.assertRaises(UsageError):
            check_section(seq, parse_zeta("1+", 1), weight_floor=-3)


class TestPartialFamilies(unittest.TestCase):
    """Residues when some Theta_0j are killed."""

    def test_beta_prime(self):
        for genus in (2, 3):
            for n in (2, 3):
                with self.subTest(genus=genus, n=n):
                    seq = builtin_sequence("beta_prime", genus, n)
                    reports = {r.candidate.label: r for r in check_all(seq, all_zeta_candidates(n))}
                    for j in range(2, n + 1):
                        passing = reports[f"zeta_{j}+"]
                        self.assertEqual(passing.verdict, SPLITS)
                        self.assertTrue(all(not any(res.coordinates) for res in passing.residues))
                        self.assertEqual(reports[f"zeta_{j}-"].verdict, OBSTRUCTED)
                    self.assertEqual(reports["zeta_1+"].verdict, OBSTRUCTED)
                    self.assertEqual(reports["zeta_1-"].verdict, OBSTRUCTED)

    def test_beta_prime_second_minus_residue(self):
        for genus in (2, 3):
            seq = builtin_sequence("beta_prime", genus, 2)
            report = check_section(seq, parse_zeta("2-", 2))
            for label in ("theta[1]", "theta[2]"):
                residue = report.residue(label)
                self.assertEqual(residue.theta, {"01": Fraction(-2, genus), "12": Fraction(0)})
                self.assertFalse(residue.complement_nonzero)

    def test_beta_prime_first_candidates(self):
        genus = 3
        seq = builtin_sequence("beta_prime", genus, 2)
        plus = check_section(seq, parse_zeta("1+", 2))
        minus = check_section(seq, parse_zeta("1-", 2))
        self.assertEqual(plus.theta_coordinate("01"), 2 - Fraction(2, genus))
        self.assertEqual(minus.theta_coordinate("01"), -2 - Fraction(2, genus))

    def test_beta_hat_all_pass(self):
        for genus in (2, 3):
            for n in (1, 2):
                with self.subTest(genus=genus, n=n):
                    seq = builtin_sequence("beta_hat", genus, n)
                    reports = check_all(seq, all_zeta_candidates(n))
                    self.assertTrue(all(r.verdict == SPLITS for r in reports))
                    self.assertTrue(all(r.witness is None for r in reports))


class TestIndependence(unittest.TestCase):
    """Reports do not depend on scheduling or the Hall order."""

    def test_parallel_matches_serial(self):
        seq = builtin_sequence("beta_prime", 2, 2)
        cands = all_zeta_candidates(2)
        serial = [r.to_dict() for r in check_all(seq, cands, workers=1)]
        parallel = [r.to_dict() for r in check_all(seq, cands, workers=4)]
        self.assertEqual(serial, parallel)

    def test_hall_order_does_not_change_theta_coordinates(self):
        cands = all_zeta_candidates(2)
        standard = builtin_sequence("beta_o", 2, 2, order=HallOrder.STANDARD)
        reverse = builtin_sequence("beta_o", 2, 2, order=HallOrder.REVERSED)
        for cand in cands:
            a = check_section(standard, cand)
            b = check_section(reverse, cand)
            self.assertEqual(a.verdict, b.verdict)
            for res_a, res_b in zip(a.residues, b.residues):
                self.assertEqual(res_a.label, res_b.label)
                self.assertEqual(res_a.theta, res_b.theta)


class TestSymbolic(unittest.TestCase):
    """Test cases for the symbolic constraint solver."""

    def test_one_point_quadratic(self):
        a1 = symbols("a1")
        for genus in range(2, 7):
            with self.subTest(genus=genus):
                result = solve_sections_symbolic(builtin_sequence("beta_o", genus, 1))
                self.assertTrue(result.exact)
                self.assertEqual(len(result.constraints), 1)
                self.assertEqual(expand(result.constraints[0] - (a1**2 - 2 * genus * a1 + 1)), 0)
                self.assertEqual(expand(result.discriminant - (4 * genus**2 - 4)), 0)
                self.assertEqual(result.rational_solutions, [])
                self.assertEqual(result.status, "no_rational_solutions")
                self.assertFalse(any(c["satisfies"] for c in result.candidate_checks))

    def test_beta_hat_unconstrained(self):
        result = solve_sections_symbolic(builtin_sequence("beta_hat", 2, 1))
        self.assertEqual(result.status, "unconstrained")
        self.assertEqual(result.constraints, [])

    def test_partial_solver_for_two_points(self):
        result = solve_sections_symbolic(builtin_sequence("beta_prime", 2, 2))
        data = result.to_dict()
        self.assertEqual(data["solver"], "partial")
        checks = {c["label"]: c["satisfies"] for c in data["candidate_checks"]}
        self.assertEqual(checks, {"zeta_1+": False, "zeta_1-": False, "zeta_2+": True, "zeta_2-": False})

    def test_zero_copies(self):
        result = solve_sections_symbolic(builtin_sequence("beta_o", 2, 0))
        self.assertEqual(result.status, "no_candidates")

    def test_floor_must_be_two(self):
        with self.assertRaises(UsageError):
            solve_sections_symbolic(builtin_sequence("beta_o", 2, 1), weight_floor=-3)


class TestCertificates(unittest.TestCase):
    """Test cases for certificate output and verification."""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.seq = builtin_sequence("beta_o", 2, 1)
        self.reports = check_all(self.seq, all_zeta_candidates(1))

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, payload):
        path = os.path.join(self.tmp.name, "cert.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f)
        return path

    def test_byte_identical_output(self):
        again = check_all(builtin_sequence("beta_o", 2, 1), all_zeta_candidates(1))
        self.assertEqual(certificate_to_json(self.seq, self.reports), certificate_to_json(self.seq, again))

    def test_roundtrip_verifies(self):
        payload = load_certificate(self._write(certificate_to_dict(self.seq, self.reports)))
        result = verify_certificate(payload, recompute=True)
        self.assertTrue(result.ok)
        self.assertEqual(result.checked, 2)

    def test_tampered_verdict_detected(self):
        payload = certificate_to_dict(self.seq, self.reports)
        payload["reports"][0]["verdict"] = SPLITS
        result = verify_certificate(load_certificate(self._write(payload)))
        self.assertFalse(result.ok)
        self.assertEqual(len(result.mismatches), 1)

    def test_tampered_residue_detected_on_recompute(self):
        payload = certificate_to_dict(self.seq, self.reports)
        coords = payload["reports"][0]["residues"][0]["coordinates"]
        index = next(i for i, c in enumerate(coords) if c != "0")
        coords[index] = "7"
        result = verify_certificate(payload, recompute=True)
        self.assertFalse(result.ok)

    def test_not_a_certificate(self):
        with self.assertRaises(UsageError):
            load_certificate(self._write({"schema": "other"}))
        with self.assertRaises(UsageError):
            load_certificate(os.path.join(self.tmp.name, "missing.json"))


if __name__ == "__main__":
    unittest.main()
