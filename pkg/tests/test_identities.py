import unittest

from app.core.identities import (
    even_even_identity,
    even_odd_identity,
    odd_even_identity,
    odd_odd_identity,
    parity_identity,
    verify_appendix,
    verify_families,
    verify_section3,
)


def _failures(report):
    return [f"{c.name} ({c.m}, {c.n}) {c.detail}" for c in report.checks if not c.passed]


class TestParityIdentities(unittest.TestCase):
    def test_odd_even(self):
        for m in range(1, 14, 2):
            for n in range(2, 13, 2):
                lhs, rhs = odd_even_identity(m, n)
                self.assertEqual(lhs, rhs, (m, n))

    def test_odd_odd(self):
        for m in range(1, 14, 2):
            for n in range(1, 14, 2):
                lhs, rhs = odd_odd_identity(m, n)
                self.assertEqual(lhs, rhs, (m, n))

    def test_even_odd(self):
        for m in range(2, 15, 2):
            for n in range(1, 14, 2):
                lhs, rhs = even_odd_identity(m, n)
                self.assertEqual(lhs, rhs, (m, n))

    def test_even_even(self):
        for m in range(2, 15, 2):
            for n in range(2, 15, 2):
                lhs, rhs = even_even_identity(m, n)
                self.assertEqual(lhs, rhs, (m, n))

    def test_wrong_parity_is_rejected(self):
        with self.assertRaises(ValueError):
            odd_even_identity(2, 2)
        with self.assertRaises(ValueError):
            even_even_identity(3, 2)

    def test_dispatch(self):
        self.assertIn("odd/even", parity_identity(3, 2)[0])
        self.assertIn("even/odd", parity_identity(2, 3)[0])
        self.assertIn("odd/odd", parity_identity(3, 3)[0])
        self.assertIn("even/even", parity_identity(2, 2)[0])


class TestSuites(unittest.TestCase):
    def test_section3(self):
        for m, n in [(3, 2), (2, 2), (3, 3), (5, 3), (6, 4)]:
            report = verify_section3(m, n, window=2, samples=10)
            self.assertTrue(report.passed, _failures(report))

    def test_section3_uses_absolute_values(self):
        report = verify_section3(-3, 2, samples=5)
        self.assertTrue(report.passed, _failures(report))

    def test_appendix(self):
        for m, n in [(4, 3), (5, 2), (4, 6)]:
            report = verify_appendix(m, n, samples=10)
            self.assertTrue(report.passed, _failures(report))

    def test_families(self):
        failures = [c for c in verify_families() if not c.passed]
        self.assertEqual(failures, [])


if __name__ == "__main__":
    unittest.main()
