import random
import unittest
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from hypothesis import given, settings, strategies as st

from app.core.identities import h_times_D, s_times_D
from app.core.traceword import (
    Word,
    eval_word,
    is_reducible_pair,
    mat2,
    random_pair,
    random_sl2,
    reduce_trace,
    trace_triple,
)
from app.core.tripoly import F, X, Y, Z, lift_x, poly_D
from app.core.unipoly import fam_f

syllables = st.lists(
    st.tuples(st.sampled_from(["x", "y"]), st.integers(-4, 4).filter(lambda e: e != 0)),
    max_size=6,
)


def _random_word(rng: random.Random, max_letters: int = 10) -> Word:
    syl = []
    letters = 0
    while True:
        e = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
        if letters + abs(e) > max_letters:
            break
        syl.append((rng.choice("xy"), e))
        letters += abs(e)
    return Word(tuple(syl))


class TestWord(unittest.TestCase):
    def test_parse(self):
        word = Word.parse("x^3 y^-2 x y")
        self.assertEqual(word.syllables, (("x", 3), ("y", -2), ("x", 1), ("y", 1)))
        self.assertEqual(word.to_text(), "x^3 y^-2 x y")

    def test_free_reduction(self):
        self.assertEqual(Word.parse("x y y^-1 x").syllables, (("x", 2),))
        self.assertEqual(Word.parse("x x^-1").to_text(), "1")

    def test_malformed(self):
        for text in ("z", "x^", "x^a", "xy"):
            with self.assertRaises(ValueError):
                Word.parse(text)

    def test_inverse(self):
        self.assertEqual(Word.parse("x y^2").inverse(), Word.parse("y^-2 x^-1"))


class TestReduceTrace(unittest.TestCase):
    def test_small_words(self):
        self.assertEqual(reduce_trace(Word()).to_text(), "2")
        self.assertEqual(reduce_trace(Word.parse("x")), X)
        self.assertEqual(reduce_trace(Word.parse("x y")), Z)
        self.assertEqual(reduce_trace(Word.parse("x y^-1")), X * Y - Z)

    def test_commutator(self):
        poly = reduce_trace(Word.parse("x y x^-1 y^-1"))
        self.assertEqual(poly, poly_D() + 2)
        self.assertEqual(poly.to_text(), "X^2 + Y^2 + Z^2 - X*Y*Z - 2")

    def test_powers(self):
        for k in range(-20, 21):
            self.assertEqual(reduce_trace(Word.power("x", k)), lift_x(fam_f(k)))

    def test_large_exponents(self):
        self.assertEqual(reduce_trace(Word.parse("x^1500 y")), F(1500, -1))
        self.assertEqual(reduce_trace(Word.parse("y^-1200 x")), F(1, 1200))

    def test_two_syllable_words(self):
        for a in range(-8, 9):
            for b in range(-8, 9):
                self.assertEqual(reduce_trace(Word((("x", a), ("y", -b)))), F(a, b))

    def test_matches_matrices(self):
        rng = random.Random(7)
        for i in range(500):
            word = _random_word(rng)
            A, B = random_pair(i, scale=0.5)
            x, y, z = trace_triple(A, B)
            approx, scale = reduce_trace(word).eval_with_scale(x, y, z)
            self.assertLessEqual(abs(eval_word(word, A, B) - approx), 1e-9 * max(1.0, scale), word.to_text())

    @settings(max_examples=50, deadline=None)
    @given(syllables, st.integers(0, 5))
    def test_conjugation_and_inverse_invariance(self, syl, shift):
        word = Word(tuple(syl))
        rotated = Word(tuple(syl[shift % max(1, len(syl)):] + syl[:shift % max(1, len(syl))]))
        self.assertEqual(reduce_trace(word), reduce_trace(word.inverse()))
        self.assertEqual(reduce_trace(word), reduce_trace(rotated))

    def test_concurrent_callers_agree(self):
        words = [Word.parse("x^2 y x^-1 y^3"), Word.parse("x y^2 x^2 y"), Word.parse("y^-3 x^4")] * 4
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(reduce_trace, words))
        for word, poly in zip(words, results):
            self.assertEqual(poly, reduce_trace(word))

    def test_commutator_tail_identities(self):
        for m in range(0, 16):
            lhs, rhs = h_times_D(m)
            self.assertEqual(lhs, rhs, f"h_{m}")
        for m in range(1, 15):
            lhs, rhs = s_times_D(m)
            self.assertEqual(lhs, rhs, f"s_{m}")


class TestNumericOracle(unittest.TestCase):
    def test_empty_word(self):
        A, B = random_pair(0)
        self.assertAlmostEqual(eval_word(Word(), A, B), 2)
        self.assertAlmostEqual(eval_word(Word.parse("x"), A, B), complex(np.trace(A)))

    def test_random_sl2(self):
        self.assertTrue(np.array_equal(random_sl2(3), random_sl2(3)))
        self.assertFalse(np.array_equal(random_sl2(3), random_sl2(4)))
        for seed in range(20):
            self.assertAlmostEqual(abs(np.linalg.det(random_sl2(seed)) - 1), 0, places=12)

    def test_scale_range(self):
        with self.assertRaises(ValueError):
            random_sl2(0, scale=0)
        with self.assertRaises(ValueError):
            random_sl2(0, scale=3)

    def test_reducible_pairs(self):
        A = mat2(2, 0, 0, 0.5)
        B = mat2(3, 1, 0, 1 / 3)
        self.assertTrue(is_reducible_pair(A, B, 1e-9))
        self.assertTrue(is_reducible_pair(A, A, 1e-9))
        C, D = random_pair(3)
        self.assertFalse(is_reducible_pair(C, D, 1e-6))

    def test_reducible_needs_positive_tolerance(self):
        A, B = random_pair(0)
        with self.assertRaises(ValueError):
            is_reducible_pair(A, B, 0)


if __name__ == "__main__":
    unittest.main()
