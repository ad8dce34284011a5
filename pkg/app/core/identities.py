"""
Exact polynomial identities behind the ideal inclusions, checked term by term.

Each check builds both sides independently (univariate lifts and D on one
side, F-combinations or reduced traces on the other) and compares canonical
TriPoly values. Membership of right-hand sides in J is certified
numerically on sampled points of the variety.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from sympy import divisors

from app.core.tripoly import F, Z, TriPoly, lift_x, lift_y, poly_D, swap_xy
from app.core.traceword import Word, reduce_trace
from app.core.unipoly import (
    T,
    UniPoly,
    cyclotomic,
    expand_factorization,
    factor_family,
    fam_f,
    fam_h,
    fam_s,
    fam_sigma,
)
from app.core.variety import (
    component_order,
    enumerate_lines,
    first_nonvanishing,
    ideal_generators,
    line_samples,
    abelian_samples,
    sample_variety,
    split_gcd,
)

logger = logging.getLogger(__name__)

Sides = Tuple[TriPoly, TriPoly]


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    m: int
    n: int
    passed: bool
    detail: str = ""


@dataclass
class IdentityReport:
    m: int
    n: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


def _check(name: str, m: int, n: int, ok: bool, detail: str = "") -> IdentityCheck:
    if not ok:
        logger.warning("identity %s failed at (%d, %d): %s", name, m, n, detail)
    return IdentityCheck(name=name, m=m, n=n, passed=ok, detail="" if ok else detail)


def _equal(name: str, m: int, n: int, sides: Sides) -> IdentityCheck:
    lhs, rhs = sides
    diff = lhs - rhs
    return _check(name, m, n, diff.is_zero(), f"difference has {len(diff)} terms: {diff.to_text()[:200]}")


# -----------------------------------------------------------------------------
# Commutator identities
# -----------------------------------------------------------------------------
def _commutator_tail(a: int) -> TriPoly:
    """tr(A^a B A^-1 B^-1)."""
    return reduce_trace(Word((("x", a), ("y", 1), ("x", -1), ("y", -1))))


def h_times_D(m: int) -> Sides:
    lhs = lift_x(fam_h(m)) * poly_D()
    rhs = _commutator_tail(m) - lift_x(fam_f(m - 1))
    return lhs, rhs


def s_times_D(m: int) -> Sides:
    lhs = lift_x(fam_s(m)) * poly_D()
    if m % 2:
        rhs = (
            _commutator_tail((m + 1) // 2)
            + _commutator_tail((m - 1) // 2)
            - lift_x(fam_f((m - 3) // 2))
            - lift_x(fam_f((m - 1) // 2))
        )
    else:
        rhs = _commutator_tail(m // 2) - lift_x(fam_f((m - 2) // 2))
    return lhs, rhs


# -----------------------------------------------------------------------------
# Parity lemmas: s_m(X) * (sigma_n or f_{n/2})(Y) * D as F-combinations
# -----------------------------------------------------------------------------
def odd_even_identity(m: int, n: int) -> Sides:
    if m % 2 == 0 or n % 2:
        raise ValueError(f"odd/even identity needs m odd and n even, got ({m}, {n})")
    k = n // 2
    hi3, hi1, lo1, lo3 = (m + 3) // 2, (m + 1) // 2, (m - 1) // 2, (m - 3) // 2
    W = F(1, 1)
    lhs = lift_x(fam_s(m)) * lift_y(fam_f(k)) * poly_D()
    rhs = (
        (F(hi3, k) - F(lo3, k))
        + (F(hi1, k) - F(lo1, k))
        + (F(lo1, k - 2) - F(hi1, k + 2))
        + (F(lo3, k - 2) - F(hi3, k + 2))
        + W * ((F(hi1, k + 1) - F(lo1, k - 1)) + (F(lo1, k + 1) - F(hi1, k - 1)))
    )
    return lhs, rhs


def odd_odd_identity(m: int, n: int) -> Sides:
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError(f"odd/odd identity needs m and n odd, got ({m}, {n})")
    hi3, hi1, lo1, lo3 = (m + 3) // 2, (m + 1) // 2, (m - 1) // 2, (m - 3) // 2
    dn1, up1, up3, dn3 = (n - 1) // 2, (n + 1) // 2, (n + 3) // 2, (n - 3) // 2
    lhs = lift_x(fam_s(m)) * lift_y(fam_sigma(n)) * poly_D()
    rhs = (
        (F(hi3, dn1) - F(lo3, up1))
        + (F(hi1, dn1) - F(lo1, up1))
        + (F(lo1, up3) - F(hi1, dn3))
        + (F(lo3, up3) - F(hi3, dn3))
        + Z * ((F(hi1, dn1) - F(lo1, up1)) + (F(lo1, dn1) - F(hi1, up1)))
    )
    return lhs, rhs


def even_odd_identity(m: int, n: int) -> Sides:
    if m % 2 or n % 2 == 0:
        raise ValueError(f"even/odd identity needs m even and n odd, got ({m}, {n})")
    half = m // 2
    W = F(1, 1)
    lhs = lift_x(fam_s(m)) * lift_y(fam_sigma(n)) * poly_D()
    rhs = (
        (F(half + 1, (n + 1) // 2) - F(half - 1, (n - 1) // 2))
        + (F(half - 1, (n - 3) // 2) - F(half + 1, (n + 3) // 2))
        + W * (F(half, (n + 1) // 2) - F(half, (n - 1) // 2))
    )
    return lhs, rhs


def even_even_identity(m: int, n: int) -> Sides:
    if m % 2 or n % 2:
        raise ValueError(f"even/even identity needs m and n even, got ({m}, {n})")
    half, k = m // 2, n // 2
    W = F(1, 1)
    lhs = lift_x(fam_s(m)) * lift_y(fam_f(k)) * poly_D()
    rhs = (
        (F(half + 1, k) - F(half - 1, k))
        + (F(half - 1, k - 2) - F(half + 1, k + 2))
        + W * (F(half, k + 1) - F(half, k - 1))
    )
    return lhs, rhs


def parity_identity(m: int, n: int) -> Tuple[str, Sides]:
    if m % 2 and n % 2:
        return "s_m*sigma_n*D (odd/odd)", odd_odd_identity(m, n)
    if m % 2:
        return "s_m*f_n/2*D (odd/even)", odd_even_identity(m, n)
    if n % 2:
        return "s_m*sigma_n*D (even/odd)", even_odd_identity(m, n)
    return "s_m*f_n/2*D (even/even)", even_even_identity(m, n)


# -----------------------------------------------------------------------------
# Suites
# -----------------------------------------------------------------------------
def verify_section3(
    m: int,
    n: int,
    window: int = 2,
    samples: int = 20,
    seed: int = 0,
    tol: float = 1e-8,
) -> IdentityReport:
    """Exact commutator and parity identities for (|m|, |n|), then numeric J-membership of each right-hand side."""
    split_gcd(m, n)
    am, an = abs(m), abs(n)
    report = IdentityReport(m=m, n=n)

    report.checks.append(_equal("h_m*D", am, an, h_times_D(am)))
    report.checks.append(_equal("s_m*D", am, an, s_times_D(am)))
    h_lhs, h_rhs = h_times_D(an)
    report.checks.append(_equal("h_n(Y)*D", am, an, (swap_xy(h_lhs), swap_xy(h_rhs))))

    name, (lhs, rhs) = parity_identity(am, an)
    report.checks.append(_equal(name, am, an, (lhs, rhs)))
    members: Dict[str, TriPoly] = {name: rhs}
    swapped_name, (_, swapped_rhs) = parity_identity(an, am)
    members[f"swap {swapped_name}"] = swap_xy(swapped_rhs)

    points = sample_variety(am, an, samples, seed)
    for label, poly in members.items():
        miss = first_nonvanishing([poly], points, tol)
        report.checks.append(_check(f"{label} in J", am, an, miss is None, f"nonzero at {miss[1] if miss else None}"))

    report.checks.extend(ideal_inclusion_checks(am, an, window, samples, seed, tol))
    return report


def ideal_inclusion_checks(m: int, n: int, window: int, samples: int, seed: int, tol: float) -> List[IdentityCheck]:
    """J vanishes on V(I1) u V(I2) and on V(I3); line families zero their own ideal."""
    gens = ideal_generators(m, n, window)
    d, _, _ = split_gcd(m, n)
    checks: List[IdentityCheck] = []
    for idx, line in enumerate(enumerate_lines(m, n)):
        pts = line_samples(line, samples, seed + idx)
        own = gens.I1 if line.family == "I1" else gens.I2
        miss = first_nonvanishing(gens.J + own, pts, tol)
        checks.append(_check(f"J and {line.family} vanish on line {idx}", m, n, miss is None, f"generator {miss[0] if miss else -1}"))
    for c in component_order(d):
        pts = abelian_samples(m, n, c.index, samples, seed + 1000 + c.index)
        miss = first_nonvanishing(gens.I3, pts, tol)
        checks.append(_check(f"I3 vanishes on {c.label(d)}", m, n, miss is None, f"generator {miss[0] if miss else -1}"))
    return checks


def verify_appendix(m: int, n: int, samples: int = 20, seed: int = 0, tol: float = 1e-8) -> IdentityReport:
    am, an = abs(m), abs(n)
    report = IdentityReport(m=m, n=n)
    name, sides = parity_identity(am, an)
    swapped_name, (s_lhs, s_rhs) = parity_identity(an, am)
    swapped = (swap_xy(s_lhs), swap_xy(s_rhs))
    report.checks.append(_equal(name, am, an, sides))
    report.checks.append(_equal(f"swap {swapped_name}", am, an, swapped))
    points = sample_variety(am, an, samples, seed)
    for label, rhs in ((name, sides[1]), (f"swap {swapped_name}", swapped[1])):
        miss = first_nonvanishing([rhs], points, tol)
        report.checks.append(_check(f"{label} in J", am, an, miss is None, f"nonzero at {miss[1] if miss else None}"))
    return report


def telescoping_checks(bound: int) -> List[IdentityCheck]:
    """F(a,k) f_b(X) = F(a+b,k) + F(a-b,k) and the s-telescoping of F(i,k) - F(j,k)."""
    checks: List[IdentityCheck] = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for k in range(-bound, bound + 1):
                lhs = F(a, k) * lift_x(fam_f(b))
                if lhs != F(a + b, k) + F(a - b, k):
                    checks.append(_check("F(a,k)*f_b", a, b, False, f"k={k}"))
                i, j = a, b
                tele = lift_x(fam_s(i - j)) * (F((i + j + 2) // 2, k) - F((i + j - 1) // 2, k))
                if F(i, k) - F(j, k) != tele:
                    checks.append(_check("F(i,k)-F(j,k)", i, j, False, f"k={k}"))
    if not checks:
        checks.append(_check("F telescoping", bound, bound, True))
    return checks


# -----------------------------------------------------------------------------
# Univariate family suite
# -----------------------------------------------------------------------------
def _sum_f(indices) -> UniPoly:
    acc = UniPoly()
    for i in indices:
        acc = acc + fam_f(i)
    return acc


def _summation_form(kind: str, m: int) -> Optional[UniPoly]:
    if kind == "s":
        if m % 2:
            return 1 + _sum_f(range(1, (m - 1) // 2 + 1))
        if m % 4 == 0:
            return _sum_f(2 * i - 1 for i in range(1, m // 4 + 1))
        return 1 + _sum_f(2 * i for i in range(1, (m - 2) // 4 + 1))
    if kind == "sigma":
        if m % 2 == 0:
            return None
        acc = UniPoly.constant(1)
        for i in range(1, (m - 1) // 2 + 1):
            acc = acc + fam_f(i) * (-1) ** i
        return acc * (-1) ** ((m - 1) // 2)
    if m % 2:
        return 1 + _sum_f(2 * i for i in range(1, (m - 1) // 2 + 1))
    return _sum_f(2 * i - 1 for i in range(1, m // 2 + 1))


def _abs_scale(p: UniPoly, x: float) -> float:
    return max(1.0, sum(abs(c) * abs(x) ** i for i, c in enumerate(p.coeffs)))


def verify_families(limit: int = 50, product_bound: int = 25, factor_limit: int = 60) -> List[IdentityCheck]:
    checks: List[IdentityCheck] = []

    def record(name: str, k: int, ok: bool) -> None:
        if not ok:
            checks.append(_check(name, k, 0, False, f"k={k}"))

    for k in range(4, limit + 1):
        record("f recursion", k, fam_f(k) == T * fam_f(k - 1) - fam_f(k - 2))
        record("h recursion", k, fam_h(k) == T * fam_h(k - 1) - fam_h(k - 2))
        record("s recursion", k, fam_s(k) == T * fam_s(k - 2) - fam_s(k - 4))
        record("sigma recursion", k, fam_sigma(k) == T * fam_sigma(k - 2) - fam_sigma(k - 4))

    for k in range(1, limit + 1):
        record("f negative index", k, fam_f(-k) == fam_f(k))
        record("h negative index", k, fam_h(-k) == -fam_h(k))
        record("s negative index", k, fam_s(-k) == -fam_s(k))
        record("sigma negative index", k, fam_sigma(-k) == fam_sigma(k) * (-1) ** (k - 1))
        record("f parity", k, fam_f(k).compose_neg() == fam_f(k) * (-1) ** k)
        record("s/sigma parity", k, fam_s(k).compose_neg() == fam_sigma(k) * (-1) ** ((k - 1) // 2))

    for m in range(1, 41):
        for kind, fam in (("s", fam_s), ("sigma", fam_sigma), ("h", fam_h)):
            form = _summation_form(kind, m)
            if form is not None:
                record(f"{kind} summation form", m, form == fam(m))

    for i in range(-product_bound, product_bound + 1):
        for j in range(-product_bound, product_bound + 1):
            record("f_i*f_j", i, fam_f(i) * fam_f(j) == fam_f(i + j) + fam_f(i - j))

    for k in range(1, limit + 1):
        record("h odd split", k, fam_h(2 * k + 1) == fam_s(2 * k + 1) * fam_sigma(2 * k + 1))
        record("h even split", k, fam_h(2 * k) == fam_s(2 * k) * fam_f(k))

    for k in range(1, 21):
        for step in range(20):
            theta = 0.1 + step * (math.pi - 0.2) / 19
            x = math.cos(theta)
            ok_f = abs(fam_f(k).eval(2 * x) - 2 * math.cos(k * theta)) <= 1e-9 * _abs_scale(fam_f(k), 2 * x)
            ok_h = abs(fam_h(k).eval(2 * x) - math.sin(k * theta) / math.sin(theta)) <= 1e-9 * _abs_scale(fam_h(k), 2 * x)
            record("Chebyshev bridge", k, ok_f and ok_h)

    for k in range(1, factor_limit + 1):
        record("f factorization", k, expand_factorization("f", k) == fam_f(k))
        record("s factorization", k, expand_factorization("s", k) == fam_s(k))
        record("sigma factorization", k, expand_factorization("sigma", k) == fam_sigma(k))
        record("f factor degrees", k, sum(p.degree for _, p in factor_family("f", k)) == k)
        record("s factor degrees", k, sum(p.degree for _, p in factor_family("s", k)) == (k - 1) // 2)
        product = UniPoly.constant(1)
        for ell in divisors(k):
            product = product * cyclotomic(ell)
        record("cyclotomic product", k, product == UniPoly.monomial(k) - 1)

    if not checks:
        checks.append(_check("univariate families", limit, factor_limit, True))
    return checks
