import math
import unittest

from hypothesis import given, settings, strategies as st

from app.core.errors import InvariantViolation
from app.core.recover import (
    candidates_from_line_count,
    permutation_equivalent,
    recover,
    round_trip,
    validate_matrix,
)
from app.core.variety import closed_form_matrix


def _permute(matrix, order):
    return [[matrix[i][j] for j in order] for i in order]


class TestRecover(unittest.TestCase):
    def test_unique(self):
        result = recover([[1, 6], [6, 1]])
        self.assertEqual(result.verdict, "unique")
        self.assertEqual(result.pairs, [(6, 4)])

    def test_ambiguous(self):
        result = recover([[0, 2], [2, 0]])
        self.assertEqual(result.verdict, "ambiguous")
        self.assertEqual(result.pairs, [(3, 3), (4, 2)])

    def test_underdetermined(self):
        result = recover([[18]])
        self.assertEqual(result.verdict, "underdetermined")
        self.assertEqual(result.pairs, [(37, 2), (19, 3), (13, 4)])
        self.assertEqual(result.constraint, "(m-1)(n-1) = 36, gcd(m, n) = 1")

    def test_prime_line_count_is_unique(self):
        for p in (2, 5, 11, 17, 23, 29):
            result = recover([[p]])
            self.assertEqual(result.verdict, "unique", p)
            self.assertEqual(result.pairs, [(2 * p + 1, 2)])

    def test_equal_pairs(self):
        self.assertEqual(recover(closed_form_matrix(5, 5)).pairs, [(5, 5)])
        self.assertEqual(recover(closed_form_matrix(8, 8)).pairs, [(8, 8)])
        self.assertEqual(recover(closed_form_matrix(2, 2)).pairs, [(2, 2)])

    def test_round_trip(self):
        for m in range(2, 17):
            for n in range(2, m + 1):
                result = round_trip(m, n, closed_form_matrix(m, n))
                if math.gcd(m, n) > 1 and (m, n) not in ((3, 3), (4, 2)):
                    self.assertEqual(result.verdict, "unique", (m, n))
                    self.assertEqual(result.pairs, [(m, n)])

    def test_round_trip_reports_mismatch(self):
        with self.assertRaises(InvariantViolation):
            round_trip(6, 4, closed_form_matrix(9, 6))

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_permutation_invariance(self, data):
        m, n = data.draw(st.sampled_from([(6, 4), (4, 4), (42, 30), (12, 8), (9, 6), (8, 8), (15, 10)]))
        matrix = closed_form_matrix(m, n)
        order = data.draw(st.permutations(list(range(len(matrix)))))
        shuffled = _permute(matrix, order)
        self.assertTrue(permutation_equivalent(matrix, shuffled))
        self.assertEqual(recover(shuffled), recover(matrix))

    def test_invalid_inputs(self):
        for matrix in ([], [[1, 2], [3, 1]], [[1, -1], [-1, 1]], [[1, 2]], [[0]], [[1, 5], [5, 1]], [[1, 6], [6, 2]], [[0, 0], [0, 0]]):
            self.assertEqual(recover(matrix).verdict, "invalid", matrix)

    def test_validate_matrix(self):
        self.assertIsNone(validate_matrix([[1, 6], [6, 1]]))
        self.assertIn("symmetric", validate_matrix([[1, 2], [3, 1]]))
        self.assertIn("square", validate_matrix([[1, 2]]))


class TestCandidates(unittest.TestCase):
    def test_small(self):
        self.assertEqual(candidates_from_line_count(1), [(3, 2)])
        self.assertEqual(candidates_from_line_count(0), [])

    def test_negative(self):
        with self.assertRaises(ValueError):
            candidates_from_line_count(-1)

    def test_every_candidate_fits(self):
        for lines in range(1, 60):
            for m, n in candidates_from_line_count(lines):
                self.assertGreaterEqual(m, n)
                self.assertEqual((m - 1) * (n - 1), 2 * lines)
                self.assertEqual(math.gcd(m, n), 1)


if __name__ == "__main__":
    unittest.main()
