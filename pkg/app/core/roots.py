from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Angle = Union[Fraction, int]


@dataclass(frozen=True, order=True)
class UnitRational:
    """The point e^(2 pi i angle) with angle a reduced fraction in [0, 1)."""

    angle: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "angle", Fraction(self.angle) % 1)

    @classmethod
    def of(cls, p: int, q: int) -> "UnitRational":
        if q <= 0:
            raise ValueError(f"denominator must be positive, got {q}")
        return cls(Fraction(p, q))

    @property
    def p(self) -> int:
        return self.angle.numerator

    @property
    def q(self) -> int:
        return self.angle.denominator

    def __mul__(self, other: "UnitRational") -> "UnitRational":
        return UnitRational(self.angle + other.angle)

    def __pow__(self, k: int) -> "UnitRational":
        return UnitRational(self.angle * k)

    def inverse(self) -> "UnitRational":
        return UnitRational(-self.angle)

    def is_one(self) -> bool:
        return self.angle == 0

    def is_minus_one(self) -> bool:
        return self.angle == Fraction(1, 2)

    def canonical(self) -> Fraction:
        """Representative of the orbit {u, 1/u}, an angle in [0, 1/2]."""
        return min(self.angle, (1 - self.angle) % 1)

    @property
    def value(self) -> complex:
        return cmath.exp(2j * math.pi * self.angle)

    @property
    def trace(self) -> float:
        """u + 1/u."""
        return 2 * math.cos(2 * math.pi * self.angle)

    def __str__(self) -> str:
        return f"e(2pi i {self.angle})"


@dataclass(frozen=True, order=True)
class TraceCoord:
    """A coordinate u + 1/u; the angle is the orbit representative in [0, 1/2]."""

    angle: Fraction

    @classmethod
    def of(cls, u: UnitRational) -> "TraceCoord":
        return cls(u.canonical())

    @property
    def value(self) -> float:
        return 2 * math.cos(2 * math.pi * self.angle)

    def __str__(self) -> str:
        return f"2cos(2pi*{self.angle})"
