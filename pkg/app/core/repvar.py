"""
Components of the representation variety R(G) for G = <x, y | x^m = y^n>.

Components are carried by their labels only: irreducible closures by the
lines they project to, abelian ones by d-th roots of unity up to inversion,
reducible metabelian ones by pairs (xi, eta) of roots with xi^m = eta^n = +1
or both -1. The projection t to X(G) collapses the metabelian labels 2:1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from sympy.core.intfunc import igcdex

from app.core.errors import InvariantViolation
from app.core.roots import TraceCoord, UnitRational
from app.core.variety import ComponentId, Line, component_of, line_count_closed, split_gcd

logger = logging.getLogger(__name__)

Label = Tuple[UnitRational, UnitRational]
ImageKey = Tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class RepVarReport:
    m: int
    n: int
    d: int
    irr_components: int
    ab_components: int
    total: int
    metabelian_components: int
    metabelian_labels: List[Label] = field(default_factory=list)
    dimensions: Tuple[int, int, int] = (4, 3, 3)
    bezout: Tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class MetabelianImage:
    label: Label
    key: ImageKey
    triple: Tuple[float, float, float]
    line: Line
    component: ComponentId


def _plus_roots(k: int) -> List[UnitRational]:
    """xi^k = 1, xi != 1, -1."""
    return [u for u in (UnitRational.of(p, k) for p in range(k)) if not (u.is_one() or u.is_minus_one())]


def _minus_roots(k: int) -> List[UnitRational]:
    """xi^k = -1, xi != -1."""
    return [u for u in (UnitRational.of(2 * p + 1, 2 * k) for p in range(k)) if not u.is_minus_one()]


def metabelian_count_closed(m: int, n: int) -> int:
    d, _, _ = split_gcd(m, n)
    base = (abs(m) - 1) * (abs(n) - 1)
    return 2 * base if d % 2 else 2 * (base + 1)


def metabelian_labels(m: int, n: int) -> List[Label]:
    am, an = abs(m), abs(n)
    plus = [(xi, eta) for xi in _plus_roots(am) for eta in _plus_roots(an)]
    minus = [(xi, eta) for xi in _minus_roots(am) for eta in _minus_roots(an)]
    return plus + minus


def bezout(m: int, n: int) -> Tuple[int, int]:
    """(alpha, beta) with alpha * m - beta * n = gcd(m, n)."""
    d, _, _ = split_gcd(m, n)
    x, y, g = igcdex(m, n)
    alpha, beta = int(x), -int(y)
    if g < 0:
        alpha, beta = -alpha, -beta
    if alpha * m - beta * n != d:
        raise InvariantViolation(f"extended gcd of ({m}, {n}) gave {alpha}*m - {beta}*n != {d}")
    return alpha, beta


def count_repvar(m: int, n: int) -> RepVarReport:
    d, _, _ = split_gcd(m, n)
    irr = line_count_closed(m, n)
    ab = d // 2 + 1
    labels = metabelian_labels(m, n)
    metabelian = metabelian_count_closed(m, n)
    if len(labels) != metabelian:
        logger.warning("metabelian label mismatch for (%d, %d): %d labels, formula %d", m, n, len(labels), metabelian)
        raise InvariantViolation(f"({m}, {n}): {len(labels)} metabelian labels != closed form {metabelian}")
    return RepVarReport(
        m=m,
        n=n,
        d=d,
        irr_components=irr,
        ab_components=ab,
        total=irr + ab,
        metabelian_components=metabelian,
        metabelian_labels=labels,
        bezout=bezout(m, n),
    )


def metabelian_images(m: int, n: int) -> List[MetabelianImage]:
    d, mp, np_ = split_gcd(m, n)
    images: List[MetabelianImage] = []
    for xi, eta in metabelian_labels(m, n):
        family = "I1" if (xi ** abs(m)).is_one() else "I2"
        line = Line(family, TraceCoord.of(xi), TraceCoord.of(eta))
        key = (xi.canonical(), eta.canonical(), (xi * eta).canonical())
        images.append(
            MetabelianImage(
                label=(xi, eta),
                key=key,
                triple=(xi.trace, eta.trace, (xi * eta).trace),
                line=line,
                component=component_of(mp * xi.angle - np_ * eta.angle, d),
            )
        )
    return images


def distinct_images(images: List[MetabelianImage]) -> int:
    return len({img.key for img in images})
