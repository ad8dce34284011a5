"""
Character variety of G = <x, y | x^m = y^n> in the coordinates (X, Y, Z) = (tr A, tr B, tr AB).

X(G) is the union of the straight lines {x = a, y = b} (characters of
irreducible representations, V(I1) u V(I2)) and the abelian components
C_{zeta^i} = {(u + 1/u, v + 1/v, uv + 1/(uv)) : u^m' = zeta^i v^n'} with
zeta = e^(2 pi i / d), d = gcd(m, n), m = m'd, n = n'd.

Every line meets the abelian part in exactly two points; the intersection
matrix counts lines by the pair of components they meet.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from app.core.errors import InvariantViolation
from app.core.roots import TraceCoord, UnitRational
from app.core.tripoly import X, Y, F, TriPoly, lift_x, lift_y, mirror, poly_D
from app.core.unipoly import UniPoly, fam_f, fam_s, fam_sigma

logger = logging.getLogger(__name__)

LineFamily = Literal["I1", "I2"]
Point = Tuple[complex, complex, complex]


def _require_nonzero(m: int, n: int) -> None:
    if m == 0 or n == 0:
        raise ValueError(f"m and n must be nonzero, got ({m}, {n})")


def split_gcd(m: int, n: int) -> Tuple[int, int, int]:
    """(d, m', n') with d = gcd(|m|, |n|) > 0 and the signs kept on m', n'."""
    _require_nonzero(m, n)
    d = math.gcd(m, n)
    return d, m // d, n // d


# -----------------------------------------------------------------------------
# Domain types
# -----------------------------------------------------------------------------
@dataclass(frozen=True, order=True)
class ComponentId:
    index: int

    def label(self, d: int) -> str:
        if self.index == 0:
            return "C_1"
        if d % 2 == 0 and self.index == d // 2:
            return "C_-1"
        return f"C_zeta^{self.index}"

    def node(self, d: int) -> str:
        if self.index == 0:
            return "C1"
        if d % 2 == 0 and self.index == d // 2:
            return "Cm1"
        return f"Czeta{self.index}"


@dataclass(frozen=True, order=True)
class Line:
    family: LineFamily
    xcoord: TraceCoord
    ycoord: TraceCoord

    @property
    def a(self) -> float:
        return self.xcoord.value

    @property
    def b(self) -> float:
        return self.ycoord.value

    def at(self, z: complex) -> Point:
        return (complex(self.a), complex(self.b), complex(z))


@dataclass(frozen=True)
class IncidencePoint:
    line: Line
    z_angle: Fraction
    component: ComponentId

    @property
    def point(self) -> Point:
        return self.line.at(UnitRational(self.z_angle).trace)


@dataclass(frozen=True)
class IdealGenerators:
    J: List[TriPoly]
    I1: List[TriPoly]
    I2: List[TriPoly]
    I3_extra: TriPoly
    core_size: int = 3

    @property
    def J_core(self) -> List[TriPoly]:
        return self.J[: self.core_size]

    @property
    def I3(self) -> List[TriPoly]:
        return self.J + [self.I3_extra]


@dataclass(frozen=True)
class ComponentCounts:
    lines: int
    abelian: int
    total: int
    genus: Optional[int] = None


@dataclass(frozen=True)
class VarietyReport:
    m: int
    n: int
    d: int
    m_prime: int
    n_prime: int
    lines: List[Line]
    components: List[ComponentId]
    incidence: List[Tuple[ComponentId, ComponentId]]
    matrix: List[List[int]]
    counts: ComponentCounts
    row_sums: List[int] = field(default_factory=list)

    @property
    def incidence_points(self) -> int:
        return 2 * len(self.lines)


# -----------------------------------------------------------------------------
# Ideals
# -----------------------------------------------------------------------------
def ideal_generators(m: int, n: int, window: int = 2) -> IdealGenerators:
    _require_nonzero(m, n)
    if window < 0:
        raise ValueError(f"window must be nonnegative, got {window}")
    core = [F(m, n) - 2, F(m + 1, n) - X, F(m, n - 1) - Y]
    J = list(core)
    seen = set(core)
    for i in range(m - window, m + window + 1):
        for k in range(n - window, n + window + 1):
            g = F(i, k) - F(i - m, k - n)
            if g.is_zero() or g in seen or -g in seen:
                continue
            seen.add(g)
            J.append(g)

    I1 = [lift_x(fam_s(m)), lift_y(fam_s(n))]
    if m % 2 and n % 2:
        I2 = [lift_x(fam_sigma(m)), lift_y(fam_sigma(n))]
    elif m % 2:
        I2 = [lift_x(fam_sigma(m)), lift_y(fam_f(n // 2))]
    elif n % 2:
        I2 = [lift_x(fam_f(m // 2)), lift_y(fam_sigma(n))]
    else:
        I2 = [lift_x(fam_f(m // 2)), lift_y(fam_f(n // 2))]
    logger.debug("ideal_generators(%d, %d, window=%d): |J|=%d", m, n, window, len(J))
    return IdealGenerators(J=J, I1=I1, I2=I2, I3_extra=poly_D())


# -----------------------------------------------------------------------------
# Lines and components
# -----------------------------------------------------------------------------
def _below_half(angles: Sequence[Fraction]) -> List[Fraction]:
    return [a for a in angles if 0 < a < Fraction(1, 2)]


def enumerate_lines(m: int, n: int) -> List[Line]:
    _require_nonzero(m, n)
    am, an = abs(m), abs(n)
    lines: List[Line] = []
    for family, lam_angles, mu_angles in (
        ("I1", [Fraction(p, am) for p in range(am)], [Fraction(q, an) for q in range(an)]),
        ("I2", [Fraction(2 * p + 1, 2 * am) for p in range(am)], [Fraction(2 * q + 1, 2 * an) for q in range(an)]),
    ):
        for lam in _below_half(lam_angles):
            for mu in _below_half(mu_angles):
                lines.append(Line(family, TraceCoord(lam), TraceCoord(mu)))
    return sorted(lines)


def line_count_closed(m: int, n: int) -> int:
    d, _, _ = split_gcd(m, n)
    base = (abs(m) - 1) * (abs(n) - 1)
    return base // 2 if d % 2 else (base + 1) // 2


def component_order(d: int) -> List[ComponentId]:
    """C_1, then C_-1 when d is even, then C_zeta^i for increasing i."""
    order = [ComponentId(0)]
    if d % 2 == 0:
        order.append(ComponentId(d // 2))
    order.extend(ComponentId(i) for i in range(1, (d - 1) // 2 + 1))
    return order


def component_of(angle: Fraction, d: int) -> ComponentId:
    scaled = angle * d
    if scaled.denominator != 1:
        raise InvariantViolation(f"component angle {angle} times d={d} is not integral")
    i = int(scaled) % d
    return ComponentId(min(i, d - i) if i else 0)


def incidence_points(line: Line, m: int, n: int) -> Tuple[IncidencePoint, IncidencePoint]:
    """The two points of the line on the abelian part, with the component each lies on.

    (a, b, tr(lam mu)) comes from u = lam, v = mu and lies on C_{lam^m' mu^-n'};
    (a, b, tr(lam / mu)) comes from v = 1/mu and lies on C_{lam^m' mu^n'}.
    """
    d, mp, np_ = split_gcd(m, n)
    lam, mu = line.xcoord.angle, line.ycoord.angle
    first = IncidencePoint(line, UnitRational(lam + mu).canonical(), component_of(mp * lam - np_ * mu, d))
    second = IncidencePoint(line, UnitRational(lam - mu).canonical(), component_of(mp * lam + np_ * mu, d))
    if first.z_angle == second.z_angle:
        raise InvariantViolation(f"line {line} meets the abelian part in a single point")
    return first, second


def line_components(line: Line, m: int, n: int) -> Tuple[ComponentId, ComponentId]:
    first, second = incidence_points(line, m, n)
    return first.component, second.component


def closed_form_matrix(m: int, n: int) -> List[List[int]]:
    d, mp, np_ = split_gcd(m, n)
    mp, np_ = abs(mp), abs(np_)
    order = component_order(d)

    def special(c: ComponentId) -> bool:
        return c.index == 0 or (d % 2 == 0 and c.index == d // 2)

    matrix: List[List[int]] = []
    for r, a in enumerate(order):
        row = []
        for s, b in enumerate(order):
            if r == s:
                row.append((mp - 1) * (np_ - 1) // 2 if special(a) else (mp - 1) * np_ + mp * (np_ - 1))
            elif special(a) and special(b):
                row.append(mp * np_)
            elif special(a) or special(b):
                row.append(2 * mp * np_)
            else:
                row.append(4 * mp * np_)
        matrix.append(row)
    return matrix


def count_components(m: int, n: int) -> ComponentCounts:
    d, _, _ = split_gcd(m, n)
    lines = line_count_closed(m, n)
    enumerated = len(enumerate_lines(m, n))
    if enumerated != lines:
        logger.warning("line count mismatch for (%d, %d): closed %d, enumerated %d", m, n, lines, enumerated)
        raise InvariantViolation(f"({m}, {n}): closed-form line count {lines} != enumerated {enumerated}")
    abelian = d // 2 + 1
    if abelian != len(component_order(d)):
        raise InvariantViolation(f"({m}, {n}): abelian component count {abelian} != listed components")
    genus = (abs(m) - 1) * (abs(n) - 1) // 2 if d == 1 else None
    return ComponentCounts(lines=lines, abelian=abelian, total=lines + abelian, genus=genus)


def intersection_matrix(m: int, n: int) -> VarietyReport:
    d, mp, np_ = split_gcd(m, n)
    order = component_order(d)
    position = {c: r for r, c in enumerate(order)}
    size = len(order)
    matrix = [[0] * size for _ in range(size)]
    row_sums = [0] * size
    lines = enumerate_lines(m, n)
    incidence: List[Tuple[ComponentId, ComponentId]] = []
    for line in lines:
        c1, c2 = line_components(line, m, n)
        incidence.append((c1, c2))
        i, j = position[c1], position[c2]
        row_sums[i] += 1
        row_sums[j] += 1
        matrix[i][j] += 1
        if i != j:
            matrix[j][i] += 1

    closed = closed_form_matrix(m, n)
    if matrix != closed:
        logger.warning("intersection matrix mismatch for (%d, %d): %s vs %s", m, n, matrix, closed)
        raise InvariantViolation(f"({m}, {n}): enumerated matrix {matrix} != closed form {closed}")
    for r in range(size):
        expected = 2 * matrix[r][r] + sum(matrix[r][s] for s in range(size) if s != r)
        if expected != row_sums[r]:
            raise InvariantViolation(f"({m}, {n}): row sum of {order[r].label(d)} is {expected}, points {row_sums[r]}")

    logger.debug("intersection_matrix(%d, %d): %d lines, %d components", m, n, len(lines), size)
    return VarietyReport(
        m=m,
        n=n,
        d=d,
        m_prime=abs(mp),
        n_prime=abs(np_),
        lines=lines,
        components=order,
        incidence=incidence,
        matrix=matrix,
        counts=count_components(m, n),
        row_sums=row_sums,
    )


def incidence_graph(report: VarietyReport) -> nx.MultiGraph:
    """Components as nodes, one edge per line (a self-loop when both points share a component)."""
    graph = nx.MultiGraph(name=f"X_{abs(report.m)}_{abs(report.n)}")
    for c in report.components:
        graph.add_node(c.node(report.d), label=c.label(report.d))
    for line, (c1, c2) in zip(report.lines, report.incidence):
        graph.add_edge(
            c1.node(report.d),
            c2.node(report.d),
            family=line.family,
            angles=f"{line.xcoord.angle} {line.ycoord.angle}",
        )
    return graph


# -----------------------------------------------------------------------------
# Sampling
# -----------------------------------------------------------------------------
def abelian_samples(m: int, n: int, i: int, count: int, seed: int) -> List[Point]:
    d, mp, np_ = split_gcd(m, n)
    if not 0 <= i <= d // 2:
        raise ValueError(f"component index {i} outside [0, {d // 2}]")
    rng = np.random.default_rng(seed)
    zeta_i = cmath.exp(2j * math.pi * i / d)
    points: List[Point] = []
    for _ in range(count):
        v = rng.uniform(0.5, 2.0) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        target = zeta_i * v ** np_
        branch = int(rng.integers(abs(mp)))
        u = cmath.exp((cmath.log(target) + 2j * math.pi * branch) / abs(mp))
        if mp < 0:
            u = 1 / u
        points.append((u + 1 / u, v + 1 / v, u * v + 1 / (u * v)))
    return points


def line_samples(line: Line, count: int, seed: int) -> List[Point]:
    rng = np.random.default_rng(seed)
    return [line.at(complex(rng.uniform(-2.5, 2.5), rng.uniform(-0.5, 0.5))) for _ in range(count)]


# -----------------------------------------------------------------------------
# Abelian parametrization, mirror image, K_{m,2}
# -----------------------------------------------------------------------------
def abelian_param(m: int, n: int) -> Tuple[UniPoly, UniPoly, UniPoly]:
    """C_1 = {(f_n'(t), f_m'(t), f_{n'+m'}(t))}."""
    _, mp, np_ = split_gcd(m, n)
    return fam_f(np_), fam_f(mp), fam_f(np_ + mp)


@dataclass(frozen=True)
class MirrorCount:
    enumerated: int
    closed_form: int


def mirror_closed_form(m: int, n: int) -> int:
    # both even: the four characters with u, v in {1, -1} and u^m = v^n = 1 are fixed by inversion
    return m * n + 1 + (1 if m % 2 == 0 and n % 2 == 0 else 0)


def mirror_intersection_count(m: int, n: int) -> MirrorCount:
    """Points shared by X(G_{m,n}) and its mirror image X(G_{m,-n}): u^m = v^n = +1 or -1."""
    if m <= 0 or n <= 0:
        raise ValueError(f"mirror count needs positive m, n, got ({m}, {n})")
    us = [(UnitRational.of(p, m), 1) for p in range(m)] + [(UnitRational.of(2 * p + 1, 2 * m), -1) for p in range(m)]
    vs = [(UnitRational.of(q, n), 1) for q in range(n)] + [(UnitRational.of(2 * q + 1, 2 * n), -1) for q in range(n)]
    keys = {
        (u.canonical(), v.canonical(), (u * v).canonical())
        for u, su in us
        for v, sv in vs
        if su == sv
    }
    closed = mirror_closed_form(m, n)
    if len(keys) != closed:
        raise InvariantViolation(f"mirror intersection ({m}, {n}): enumerated {len(keys)} != closed form {closed}")
    return MirrorCount(enumerated=len(keys), closed_form=closed)


def mirror_window_matches(m: int, n: int, window: int = 2) -> Tuple[int, int]:
    """How many mirrored J generators of (m, n) are J generators of (m, -n), up to sign."""
    source = ideal_generators(m, n, window).J
    target = set(ideal_generators(m, -n, window).J)
    matched = sum(1 for g in source if mirror(g) in target or -mirror(g) in target)
    return matched, len(source)


def planar_model_m2(m: int) -> TriPoly:
    _require_planar(m)
    return (X * X - Y - 2) * lift_y(fam_sigma(m))


def char_map_m2(m: int) -> Tuple[TriPoly, TriPoly]:
    _require_planar(m)
    return F((m + 1) // 2, 1), X


def _require_planar(m: int) -> None:
    if m % 2 == 0 or m < 3:
        raise ValueError(f"planar model needs odd m >= 3, got {m}")


def map_to_plane(m: int, point: Point) -> Tuple[complex, complex]:
    first, second = char_map_m2(m)
    return first.eval(*point), second.eval(*point)


# -----------------------------------------------------------------------------
# Numeric membership
# -----------------------------------------------------------------------------
def sample_variety(m: int, n: int, count: int, seed: int) -> List[Point]:
    """Points on every line plus points on every abelian component."""
    d, _, _ = split_gcd(m, n)
    points: List[Point] = []
    for idx, line in enumerate(enumerate_lines(m, n)):
        points.extend(line_samples(line, count, seed + idx))
    for c in component_order(d):
        points.extend(abelian_samples(m, n, c.index, count, seed + 1000 + c.index))
    return points


def first_nonvanishing(polys: Sequence[TriPoly], points: Sequence[Point], tol: float) -> Optional[Tuple[int, Point]]:
    for gi, g in enumerate(polys):
        for p in points:
            if not g.vanishes_at(p, tol):
                return gi, p
    return None


def kappa_line(line: Line) -> Tuple[Fraction, Fraction]:
    """Angles of (-a, -b): u -> -u moves the angle by 1/2."""
    return (UnitRational(line.xcoord.angle + Fraction(1, 2)).canonical(),
            UnitRational(line.ycoord.angle + Fraction(1, 2)).canonical())
