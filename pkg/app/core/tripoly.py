"""
Sparse trivariate integer polynomials in the trace coordinates

    X = tr A,  Y = tr B,  Z = tr AB.

``F(a, b)`` is the polynomial with F(a, b)(tr A, tr B, tr AB) = tr(A^a B^-b).
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from app.core.unipoly import UniPoly, fam_f, lift_terms

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int, int]
Point = Tuple[complex, complex, complex]


class TriPoly:
    """Immutable mapping exponent triple -> nonzero integer coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, int], Iterable[Tuple[Exponent, int]]] = ()) -> None:
        acc: Dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            if c:
                key = (int(exp[0]), int(exp[1]), int(exp[2]))
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "TriPoly":
        return cls({(0, 0, 0): c})

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = TriPoly.constant(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Union["TriPoly", int]) -> "TriPoly":
        other = _coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return TriPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "TriPoly":
        return TriPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["TriPoly", int]) -> "TriPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["TriPoly", int]) -> "TriPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["TriPoly", int]) -> "TriPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        acc: Dict[Exponent, int] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return TriPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TriPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "TriPoly":
        return TriPoly({e: v * c for e, v in self._terms.items()})

    # -- evaluation --------------------------------------------------------

    def eval(self, x: complex, y: complex, z: complex) -> complex:
        return self.eval_with_scale(x, y, z)[0]

    def eval_with_scale(self, x: complex, y: complex, z: complex) -> Tuple[complex, float]:
        """Value and the sum of absolute term values, the natural scale for rounding error."""
        value: complex = 0
        scale = 0.0
        for (i, j, k), c in self._terms.items():
            term = c * (x ** i) * (y ** j) * (z ** k)
            value += term
            scale += abs(term)
        return value, scale

    def vanishes_at(self, point: Point, tol: float) -> bool:
        value, scale = self.eval_with_scale(*point)
        return abs(value) <= tol * max(1.0, scale)

    # -- rendering -------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Exponent, int]]:
        """Graded lexicographic order X > Y > Z, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def display_terms(self) -> List[Tuple[Exponent, int]]:
        """Positive terms, then negative ones; graded lex inside each group."""
        ordered = self.sorted_terms()
        return [t for t in ordered if t[1] > 0] + [t for t in ordered if t[1] < 0]

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for (i, j, k), c in self.display_terms():
            factors = [_power(v, e) for v, e in (("X", i), ("Y", j), ("Z", k)) if e]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def to_json(self) -> List[Dict[str, object]]:
        return [{"i": i, "j": j, "k": k, "coeff": str(c)} for (i, j, k), c in self.sorted_terms()]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TriPoly({self.to_text()!r})"


def _power(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


def _coerce(value: Union[TriPoly, int]) -> TriPoly:
    if isinstance(value, TriPoly):
        return value
    if isinstance(value, int):
        return TriPoly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


ZERO = TriPoly()
ONE = TriPoly.constant(1)
X = TriPoly({(1, 0, 0): 1})
Y = TriPoly({(0, 1, 0): 1})
Z = TriPoly({(0, 0, 1): 1})


# -----------------------------------------------------------------------------
# Lifts and substitutions
# -----------------------------------------------------------------------------
def lift_x(p: UniPoly) -> TriPoly:
    return TriPoly({(i, 0, 0): c for i, c in lift_terms(p)})


def lift_y(p: UniPoly) -> TriPoly:
    return TriPoly({(0, i, 0): c for i, c in lift_terms(p)})


def swap_xy(p: TriPoly) -> TriPoly:
    return TriPoly({(j, i, k): c for (i, j, k), c in p.items()})


def kappa(p: TriPoly) -> TriPoly:
    """(X, Y, Z) -> (-X, -Y, Z)."""
    return TriPoly({(i, j, k): (-c if (i + j) % 2 else c) for (i, j, k), c in p.items()})


def mirror(p: TriPoly) -> TriPoly:
    """(X, Y, Z) -> (X, Y, XY - Z)."""
    top = max((k for (_, _, k) in p._terms), default=0)
    powers = [ONE]
    w = X * Y - Z
    for _ in range(top):
        powers.append(powers[-1] * w)
    acc: Dict[Exponent, int] = {}
    for (i, j, k), c in p.items():
        for (a, b, e), v in powers[k].items():
            key = (i + a, j + b, e)
            acc[key] = acc.get(key, 0) + c * v
    return TriPoly(acc)


def poly_D() -> TriPoly:
    return X * X + Y * Y + Z * Z - X * Y * Z - 4


# -----------------------------------------------------------------------------
# F(a, b) = tr(A^a B^-b)
# -----------------------------------------------------------------------------
def _walk(lead: TriPoly, prev: TriPoly, cur: TriPoly, steps: int) -> TriPoly:
    """Apply next = lead * cur - prev ``steps`` times and return cur."""
    for _ in range(steps):
        prev, cur = cur, lead * cur - prev
    return cur


@lru_cache(maxsize=None)
def _F_row_one(b: int) -> TriPoly:
    """F(1, b): two-term recurrence in b with coefficient Y."""
    if b >= 0:
        return X if b == 0 else _walk(Y, X, X * Y - Z, b - 1)
    return _walk(Y, X, Z, -b - 1)


@lru_cache(maxsize=None)
def F(a: int, b: int) -> TriPoly:
    row_zero = lift_y(fam_f(b))
    if a == 0:
        return row_zero
    row_one = _F_row_one(b)
    if a > 0:
        return _walk(X, row_zero, row_one, a - 1)
    # F(-1, b) = X F(0, b) - F(1, b)
    return _walk(X, row_one, row_zero, -a)
