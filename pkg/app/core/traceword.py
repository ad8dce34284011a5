"""
Trace reduction for words in two SL(2,C) matrices and the numeric matrix oracle.

``reduce_trace`` rewrites tr w(A, B) as a TriPoly in (tr A, tr B, tr AB) with

    tr U = tr U^-1,   tr UV = tr VU,   tr UV = tr U tr V - tr UV^-1,
    U^k = h_k(tr U) U - h_(k-1)(tr U) I.

Every rewrite strictly lowers the number of letters, except the commutator
step x^e y^g x^-e y^-g which trades two letters of exponent one for
exponents of size two, after which flattening lowers the count again.
"""

from __future__ import annotations

import logging
import math
import re
import threading
from dataclasses import dataclass
from typing import Dict, List, Literal, Sequence, Tuple

import numpy as np

from app.core.errors import InvariantViolation
from app.core.tripoly import X, Y, Z, TriPoly, lift_x, lift_y
from app.core.unipoly import UniPoly, fam_h

logger = logging.getLogger(__name__)

Generator = Literal["x", "y"]
Syllable = Tuple[str, int]
Mat2 = np.ndarray

_SYLLABLE_RE = re.compile(r"^([xy])(?:\^(-?\d+))?$")


def _free_reduce(syllables: Sequence[Syllable]) -> Tuple[Syllable, ...]:
    stack: List[Syllable] = []
    for g, e in syllables:
        if g not in ("x", "y"):
            raise ValueError(f"unknown generator {g!r}")
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            merged = stack.pop()[1] + e
            if merged:
                stack.append((g, merged))
        else:
            stack.append((g, int(e)))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "syllables", _free_reduce(self.syllables))

    @classmethod
    def parse(cls, text: str) -> "Word":
        syllables: List[Syllable] = []
        for token in text.split():
            match = _SYLLABLE_RE.match(token)
            if match is None:
                raise ValueError(f"malformed syllable {token!r} (expected x, y^-2, ...)")
            gen, exp = match.groups()
            syllables.append((gen, int(exp) if exp is not None else 1))
        return cls(tuple(syllables))

    @classmethod
    def power(cls, gen: str, k: int) -> "Word":
        return cls(((gen, k),))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    @property
    def letter_count(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def cyclic_reduce(self) -> "Word":
        syl = list(self.syllables)
        while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            g = syl[0][0]
            merged = syl[0][1] + syl[-1][1]
            middle = syl[1:-1]
            syl = list(_free_reduce([(g, merged)] + middle)) if merged else middle
        return Word(tuple(syl))

    def rotations(self) -> List["Word"]:
        syl = self.syllables
        return [Word(syl[i:] + syl[:i]) for i in range(max(1, len(syl)))]

    def canonical(self) -> "Word":
        """Smallest cyclic rotation of the word or its inverse; equal keys have equal traces."""
        base = self.cyclic_reduce()
        candidates = base.rotations() + base.inverse().rotations()
        return min(candidates, key=lambda w: w.syllables)

    def to_text(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def __str__(self) -> str:
        return self.to_text()


# -----------------------------------------------------------------------------
# Symbolic reduction (memoized)
# -----------------------------------------------------------------------------
_TRACE_MEMO: Dict[Word, TriPoly] = {}
_TRACE_MEMO_LOCK = threading.Lock()


def memo_size() -> int:
    with _TRACE_MEMO_LOCK:
        return len(_TRACE_MEMO)


def reduce_trace(word: Word) -> TriPoly:
    key = word.canonical()
    with _TRACE_MEMO_LOCK:
        cached = _TRACE_MEMO.get(key)
    if cached is not None:
        return cached
    result = _reduce_canonical(key)
    with _TRACE_MEMO_LOCK:
        # concurrent callers compute identical values; first insert wins
        result = _TRACE_MEMO.setdefault(key, result)
    return result


def _generator_trace(g: str) -> TriPoly:
    return X if g == "x" else Y


def _lift_generator(g: str, p: UniPoly) -> TriPoly:
    return lift_x(p) if g == "x" else lift_y(p)


def _reduce_canonical(word: Word) -> TriPoly:
    syl = word.syllables
    if not syl:
        return TriPoly.constant(2)
    if len(syl) == 1 and abs(syl[0][1]) == 1:
        return _generator_trace(syl[0][0])
    if len(syl) == 2 and abs(syl[0][1]) == 1 and abs(syl[1][1]) == 1:
        return Z if syl[0][1] == syl[1][1] else X * Y - Z

    # two syllables of one generator with equal sign: w = g^a P g^b Q
    for i in range(len(syl)):
        for j in range(i + 1, len(syl)):
            (g, a), (h, b) = syl[i], syl[j]
            if g == h and (a > 0) == (b > 0):
                head = Word(syl[i:j])
                tail = Word(syl[j:] + syl[:i])
                # U V^-1 = g^a P Q^-1 g^-b, conjugate to g^(a-b) P Q^-1
                rest = Word(((g, a - b),) + syl[i + 1:j]) * Word(syl[j + 1:] + syl[:i]).inverse()
                return reduce_trace(head) * reduce_trace(tail) - reduce_trace(rest)

    for idx, (g, e) in enumerate(syl):
        if abs(e) >= 2:
            # g^e = h_e(tr g) g^s - h_{e-1}(tr g) I with s the sign of e
            rest = Word(syl[idx + 1:] + syl[:idx])
            once = Word(((g, 1 if e > 0 else -1),)) * rest
            h_e = _lift_generator(g, fam_h(abs(e)))
            h_prev = _lift_generator(g, fam_h(abs(e) - 1))
            return h_e * reduce_trace(once) - h_prev * reduce_trace(rest)

    if len(syl) == 4:
        # x^e y^g x^-e y^-g
        head = Word(syl[:2])
        tail = Word(syl[2:])
        return reduce_trace(head) * reduce_trace(tail) - reduce_trace(head * tail.inverse())
    raise InvariantViolation(f"trace reduction stuck on {word}")


# -----------------------------------------------------------------------------
# Numeric oracle
# -----------------------------------------------------------------------------
def mat2(a: complex, b: complex, c: complex, d: complex) -> Mat2:
    return np.array([[a, b], [c, d]], dtype=complex)


def sl2_inverse(m: Mat2) -> Mat2:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def eval_word(word: Word, A: Mat2, B: Mat2) -> complex:
    result = np.eye(2, dtype=complex)
    inverses = {"x": sl2_inverse(A), "y": sl2_inverse(B)}
    for g, e in word.syllables:
        base = (A if g == "x" else B) if e > 0 else inverses[g]
        result = result @ np.linalg.matrix_power(base, abs(e))
    return complex(np.trace(result))


def random_sl2(seed: int, scale: float = 1.0) -> Mat2:
    if not 0 < scale <= 2:
        raise ValueError(f"scale must lie in (0, 2], got {scale}")
    rng = np.random.default_rng(seed)
    while True:
        a = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        if 0.5 <= abs(a) <= 1.5:
            break
    b = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * scale / 2
    c = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * scale / 2
    return mat2(a, b, c, (1 + b * c) / a)


def random_pair(seed: int, scale: float = 1.0) -> Tuple[Mat2, Mat2]:
    return random_sl2(2 * seed, scale), random_sl2(2 * seed + 1, scale)


def trace_triple(A: Mat2, B: Mat2) -> Tuple[complex, complex, complex]:
    return complex(np.trace(A)), complex(np.trace(B)), complex(np.trace(A @ B))


def is_reducible_pair(A: Mat2, B: Mat2, tol: float) -> bool:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    commutator = A @ B @ sl2_inverse(A) @ sl2_inverse(B)
    return abs(complex(np.trace(commutator)) - 2) <= tol


def relative_gap(exact: complex, approx: complex) -> float:
    return abs(exact - approx) / max(1.0, abs(exact))


def close_enough(exact: complex, approx: complex, tol: float) -> bool:
    return math.isfinite(abs(approx)) and relative_gap(exact, approx) <= tol
