"""
Dense univariate integer polynomials and the one-variable families used by
the character variety computations.

Families (all in the variable T):

- ``fam_general(c0, c1, k)``: F_0 = c0, F_1 = c1, F_k = T*F_{k-1} - F_{k-2}
- ``fam_f``: (c0, c1) = (2, T), so f_k(u + 1/u) = u^k + u^-k
- ``fam_h``: (c0, c1) = (0, 1), so h_k(u + 1/u) = (u^k - u^-k) / (u - 1/u)
- ``fam_s`` / ``fam_sigma``: step-two recursions s_k = T*s_{k-2} - s_{k-4}
- ``cyclotomic``, ``r_poly``, ``q_poly`` and ``factor_family``
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Literal, Sequence, Tuple, Union

from sympy import divisors

from app.core.errors import InvariantViolation

logger = logging.getLogger(__name__)

FamilyKind = Literal["f", "s", "sigma"]
Number = Union[int, float, complex]


@dataclass(frozen=True)
class UniPoly:
    """Coefficient ``coeffs[i]`` multiplies T^i; the top stored coefficient is never zero."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = [int(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "UniPoly":
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- ring operations -------------------------------------------------

    def __add__(self, other: Union["UniPoly", int]) -> "UniPoly":
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["UniPoly", int]) -> "UniPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["UniPoly", int]) -> "UniPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["UniPoly", int]) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by T^k (k >= 0)."""
        if self.is_zero():
            return ZERO
        return UniPoly((0,) * k + self.coeffs)

    def divmod(self, divisor: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Long division over the integers; the divisor's leading coefficient must divide every step."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        lead = divisor.leading
        dd = divisor.degree
        quot = [0] * max(0, len(rem) - dd)
        for pos in range(len(rem) - 1, dd - 1, -1):
            c = rem[pos]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("division leaves a non-integral quotient")
            factor = c // lead
            quot[pos - dd] = factor
            for i, b in enumerate(divisor.coeffs):
                rem[pos - dd + i] -= factor * b
        return UniPoly(tuple(quot)), UniPoly(tuple(rem))

    def exact_div(self, divisor: "UniPoly") -> "UniPoly":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quot

    # -- substitutions -----------------------------------------------------

    def eval(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def compose_neg(self) -> "UniPoly":
        """p(-T)."""
        return UniPoly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    # -- rendering -------------------------------------------------------

    def to_text(self, var: str = "T") -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            parts.append(_render_term(c, mono, first=not parts))
        return " ".join(parts)

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return self.to_text()


def _render_term(c: int, mono: str, first: bool) -> str:
    mag = abs(c)
    if not mono:
        body = str(mag)
    elif mag == 1:
        body = mono
    else:
        body = f"{mag}*{mono}"
    if first:
        return f"-{body}" if c < 0 else body
    return f"- {body}" if c < 0 else f"+ {body}"


def _coerce(value: Union[UniPoly, int]) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, int):
        return UniPoly((value,))
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial")


ZERO = UniPoly(())
ONE = UniPoly((1,))
T = UniPoly((0, 1))


# -----------------------------------------------------------------------------
# Families
# -----------------------------------------------------------------------------
def fam_general(c0: Union[UniPoly, int], c1: Union[UniPoly, int], k: int) -> UniPoly:
    if k < 0:
        raise ValueError(f"fam_general needs k >= 0, got {k}")
    prev, cur = _coerce(c0), _coerce(c1)
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, T * cur - prev
    return cur


@lru_cache(maxsize=None)
def fam_f(k: int) -> UniPoly:
    return fam_general(2, T, abs(k))


@lru_cache(maxsize=None)
def fam_h(k: int) -> UniPoly:
    p = fam_general(0, 1, abs(k))
    return -p if k < 0 else p


def _step_two(bases: Sequence[UniPoly], k: int) -> UniPoly:
    seq = list(bases)
    while len(seq) <= k:
        seq.append(T * seq[-2] - seq[-4])
    return seq[k]


@lru_cache(maxsize=None)
def fam_s(k: int) -> UniPoly:
    if k < 0:
        return -fam_s(-k)
    return _step_two((ZERO, ONE, ONE, T + 1), k)


@lru_cache(maxsize=None)
def fam_sigma(k: int) -> UniPoly:
    if k < 0:
        p = fam_sigma(-k)
        return p if (-k - 1) % 2 == 0 else -p
    return _step_two((ZERO, ONE, ONE, T - 1), k)


FAMILIES = {"f": fam_f, "h": fam_h, "s": fam_s, "sigma": fam_sigma}


# -----------------------------------------------------------------------------
# Cyclotomic polynomials and their trace forms
# -----------------------------------------------------------------------------
@lru_cache(maxsize=None)
def cyclotomic(ell: int) -> UniPoly:
    if ell < 1:
        raise ValueError(f"cyclotomic index must be positive, got {ell}")
    poly = UniPoly.monomial(ell) - 1
    for d in divisors(ell)[:-1]:
        poly = poly.exact_div(cyclotomic(d))
    return poly


@lru_cache(maxsize=None)
def r_poly(ell: int) -> UniPoly:
    """Minimal polynomial of the primitive ell-th roots of -1, monic."""
    if ell < 1:
        raise ValueError(f"r_poly index must be positive, got {ell}")
    if ell % 2 == 0:
        return cyclotomic(2 * ell)
    p = cyclotomic(ell).compose_neg()
    return -p if p.leading < 0 else p


def unfold_palindromic(q: UniPoly, half: int) -> UniPoly:
    """T^half * q(T + 1/T) as a polynomial in T."""
    s_num = UniPoly((1, 0, 1))
    acc = ZERO
    for i, c in enumerate(q.coeffs):
        if c:
            acc = acc + (s_num ** i).shift(half - i) * c
    return acc


@lru_cache(maxsize=None)
def q_poly(ell: int) -> UniPoly:
    if ell < 1:
        raise ValueError(f"q_poly index must be positive, got {ell}")
    if ell == 1:
        return T - 2
    if ell == 2:
        return T + 2
    c = cyclotomic(ell)
    half = c.degree // 2
    cs = c.coeffs
    if any(cs[half + j] != cs[half - j] for j in range(half + 1)):
        raise InvariantViolation(f"cyclotomic({ell}) is not palindromic")
    # c(T) / T^half = c_half + sum_j c_{half+j} (T^j + T^-j) and T^j + T^-j = f_j(T + 1/T)
    q = UniPoly.constant(cs[half])
    for j in range(1, half + 1):
        if cs[half + j]:
            q = q + fam_f(j) * cs[half + j]
    if unfold_palindromic(q, half) != c:
        raise InvariantViolation(f"palindromic expansion of cyclotomic({ell}) does not close")
    return q


def factor_family(kind: FamilyKind, k: int) -> List[Tuple[int, UniPoly]]:
    if k == 0:
        raise ValueError("factor_family needs k != 0")
    kk = abs(k)
    if kind == "f":
        return [(4 * ell, q_poly(4 * ell)) for ell in divisors(kk) if (kk // ell) % 2 == 1]
    if kind == "s":
        return [(ell, q_poly(ell)) for ell in divisors(kk) if ell > 2]
    if kind == "sigma":
        return [(ell, q_poly(ell).compose_neg()) for ell in divisors(kk) if ell > 2]
    raise ValueError(f"unknown family kind {kind!r}")


def factor_sign(kind: FamilyKind, k: int) -> int:
    if kind == "sigma" and ((abs(k) - 1) // 2) % 2 == 1:
        return -1
    return 1


def expand_factorization(kind: FamilyKind, k: int) -> UniPoly:
    """Product of ``factor_family(kind, k)`` times its sign; equals the family at |k|."""
    acc = UniPoly.constant(factor_sign(kind, k))
    for _, factor in factor_family(kind, k):
        acc = acc * factor
    return acc


def lift_terms(p: UniPoly) -> Iterable[Tuple[int, int]]:
    return ((i, c) for i, c in enumerate(p.coeffs) if c)
