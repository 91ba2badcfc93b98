"""
Unit tests for the CertificateStore class.
"""

import os
import tempfile
import unittest

from src.core import PersistenceError
from src.obstruction import all_zeta_candidates, builtin_sequence, certificate_to_dict, check_all
from src.persistence import CertificateStore
from src.persistence.database import Base


class TestCertificateStore(unittest.TestCase):
    """Test cases for the CertificateStore class."""

    @classmethod
    def setUpClass(cls):
        seq = builtin_sequence("beta_o", 2, 1)
        cls.certificate = certificate_to_dict(seq, check_all(seq, all_zeta_candidates(1)))

    def setUp(self):
        self.store = CertificateStore(":memory:")

    def tearDown(self):
        self.store.close()

    def test_record_and_get(self):
        run_id = self.store.record_run("sections", {"kind": "beta_o", "genus": 2, "n": 1})
        ids = self.store.record_certificate_file(self.certificate, run_id)
        self.assertEqual(len(ids), 2)
        stored = self.store.get_certificate(ids[0])
        self.assertEqual(stored["run_id"], run_id)
        self.assertEqual(stored["candidate"], "zeta_1+")
        self.assertEqual(stored["verdict"], "obstructed")
        self.assertEqual(stored["payload"]["report"], self.certificate["reports"][0])
        self.assertEqual(stored["payload"]["sequence"], self.certificate["sequence"])

    def test_missing_certificate(self):
        self.assertIsNone(self.store.get_certificate(42))
        self.assertFalse(self.store.delete_certificate(42))

    def test_list_filters(self):
        self.store.record_certificate_file(self.certificate)
        self.assertEqual(len(self.store.list_certificates()), 2)
        self.assertEqual(len(self.store.list_certificates(kind="beta_o", verdict="obstructed")), 2)
        self.assertEqual(self.store.list_certificates(kind="beta_hat"), [])
        self.assertEqual(self.store.list_certificates(verdict="splits_at_this_level"), [])

    def test_delete(self):
        first, _ = self.store.record_certificate_file(self.certificate)
        self.assertEqual(self.store.count(), 2)
        self.assertTrue(self.store.delete_certificate(first))
        self.assertEqual(self.store.count(), 1)

    def test_file_database(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "nested", "certs.db")
            store = CertificateStore(path)
            store.record_certificate_file(self.certificate)
            store.close()
            reopened = CertificateStore(path)
            self.assertEqual(reopened.count(), 2)
            reopened.close()

    def test_unopenable_path_raises(self):
        with tempfile.TemporaryDirectory() as tmp:
            blocker = os.path.join(tmp, "blocker")
            with open(blocker, "w", encoding="utf-8") as f:
                f.write("not a directory")
            with self.assertRaises(PersistenceError):
                CertificateStore(os.path.join(blocker, "sub", "certs.db"))

    def test_database_errors_raise(self):
        Base.metadata.drop_all(self.store._engine)
        with self.assertRaises(PersistenceError):
            self.store.record_run("sections", {})
        with self.assertRaises(PersistenceError):
            self.store.record_certificate_file(self.certificate)
        with self.assertRaises(PersistenceError):
            self.store.get_certificate(1)
        with self.assertRaises(PersistenceError):
            self.store.list_certificates()
        with self.assertRaises(PersistenceError):
            self.store.count()
        self.assertFalse(self.store.delete_certificate(1))


if __name__ == "__main__":
    unittest.main()
