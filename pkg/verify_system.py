"""
검증 스위트 오케스트레이션 (섹션별 병렬 실행)

섹션
- 2: 단변수 다항식 족 (점화식, 곱셈 공식, 분해)
- 3: 교환자/패리티 항등식과 J 소속, F telescoping
- 4: 분해 곱, 원분다항식 곱, 성분 개수
- 5: 교차 행렬 (열거 vs 닫힌 식), 선과 아벨 성분의 교점
- 6: 교차 행렬에서 (m, n) 복원 round-trip
- 7: 표현 다양체 성분 개수와 metabelian 상
- 8: 아벨 매개화, 거울 대합, K_{m,2} 평면 모델
- appendix: 패리티별 보조정리

환경변수는 app.core.config 참고.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple, TypedDict, get_args

import numpy as np
from sympy import divisors

from app.core.config import Settings, get_settings
from app.core.errors import CharVarError
from app.core.identities import IdentityCheck, telescoping_checks, verify_appendix, verify_families, verify_section3
from app.core.recover import round_trip
from app.core.repvar import count_repvar, distinct_images, metabelian_images
from app.core.tripoly import kappa, mirror
from app.core.unipoly import UniPoly, cyclotomic, expand_factorization, fam_f, fam_s, fam_sigma
from app.core.variety import (
    abelian_param,
    count_components,
    enumerate_lines,
    ideal_generators,
    incidence_points,
    intersection_matrix,
    kappa_line,
    map_to_plane,
    mirror_intersection_count,
    mirror_window_matches,
    planar_model_m2,
    sample_variety,
    split_gcd,
)

logger = logging.getLogger(__name__)

SectionKind = Literal["2", "3", "4", "5", "6", "7", "8", "appendix"]
SECTIONS: Tuple[SectionKind, ...] = get_args(SectionKind)
DEFAULT_SECTION: SectionKind = "3"


@dataclass
class SuiteResult:
    name: SectionKind
    passed: bool
    checks: int
    failures: List[str] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    elapsed: float = 0.0


class VerifyState(TypedDict):
    m: int
    n: int
    sections: List[SectionKind]
    results: List[SuiteResult]
    passed: bool


class _Ledger:
    """Collects pass/fail outcomes for one suite."""

    def __init__(self) -> None:
        self.count = 0
        self.failures: List[str] = []
        self.skipped: List[str] = []

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.count += 1
        if not ok:
            self.failures.append(f"{name}: {detail}" if detail else name)

    def extend(self, checks: Sequence[IdentityCheck]) -> None:
        for c in checks:
            self.check(f"{c.name} ({c.m}, {c.n})", c.passed, c.detail)

    def skip(self, reason: str) -> None:
        self.skipped.append(reason)


# -----------------------------------------------------------------------------
# Validation / routing
# -----------------------------------------------------------------------------
def validate_section(section: str) -> Optional[str]:
    if section == "all" or section in SECTIONS:
        return None
    return f"unknown section {section!r}; choose from {', '.join(SECTIONS)} or all"


def route_to_suites(sections: Optional[Sequence[str]]) -> List[SectionKind]:
    if not sections:
        return [DEFAULT_SECTION]
    if "all" in sections:
        return list(SECTIONS)
    picked = {s for s in sections if s in SECTIONS}
    if not picked:
        return [DEFAULT_SECTION]
    return [s for s in SECTIONS if s in picked]


# -----------------------------------------------------------------------------
# Suites
# -----------------------------------------------------------------------------
def _families_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    ledger.extend(verify_families())


def _section3_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    report = verify_section3(m, n, window=settings.window, samples=settings.samples, seed=settings.seed, tol=settings.tolerance)
    ledger.extend(report.checks)
    ledger.extend(telescoping_checks(4))


def _factorization_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    fams: Dict[str, Callable[[int], UniPoly]] = {"f": fam_f, "s": fam_s, "sigma": fam_sigma}
    for k in sorted({abs(m), abs(n)}):
        for kind, fam in fams.items():
            ledger.check(f"{kind}_{k} factorization", expand_factorization(kind, k) == fam(k))
        product = UniPoly.constant(1)
        for ell in divisors(k):
            product = product * cyclotomic(ell)
        ledger.check(f"cyclotomic product {k}", product == UniPoly.monomial(k) - 1)
    counts = count_components(m, n)
    d, _, _ = split_gcd(m, n)
    ledger.check("abelian count", counts.abelian == d // 2 + 1, f"got {counts.abelian}")
    ledger.check("total count", counts.total == counts.lines + counts.abelian)


def _matrix_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    report = intersection_matrix(m, n)
    ledger.check("matrix symmetric", all(report.matrix[i][j] == report.matrix[j][i] for i in range(len(report.matrix)) for j in range(len(report.matrix))))
    I3 = ideal_generators(m, n, settings.window).I3
    for idx, line in enumerate(report.lines):
        for point in incidence_points(line, m, n):
            ok = all(g.vanishes_at(point.point, settings.tolerance) for g in I3)
            ledger.check(f"line {idx} meets {point.component.label(report.d)}", ok)
    if m % 2 and n % 2:
        angles = {(line.xcoord.angle, line.ycoord.angle) for line in report.lines}
        ledger.check("kappa symmetry", all(kappa_line(line) in angles for line in report.lines))
        gens = ideal_generators(m, n, 0)
        ledger.check("kappa(I1) = I2", all(kappa(g) in gens.I2 or -kappa(g) in gens.I2 for g in gens.I1))
    else:
        ledger.skip("kappa symmetry needs odd m and n")


def _recover_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    if min(abs(m), abs(n)) < 2:
        ledger.skip("recovery needs |m|, |n| >= 2")
        return
    result = round_trip(m, n, intersection_matrix(m, n).matrix)
    ledger.check("recover round trip", True, result.verdict)


def _repvar_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    report = count_repvar(m, n)
    counts = count_components(m, n)
    ledger.check("R(G) and X(G) totals", report.total == counts.total, f"{report.total} vs {counts.total}")
    ledger.check("irreducible closures", report.irr_components == len(enumerate_lines(m, n)))
    images = metabelian_images(m, n)
    ledger.check("2:1 collapse", 2 * distinct_images(images) == report.metabelian_components)
    gens = ideal_generators(m, n, settings.window)
    for img in images:
        placed = any(
            p.line == img.line and p.component == img.component and p.z_angle == img.key[2]
            for p in incidence_points(img.line, m, n)
        )
        ledger.check(f"image of {img.label[0]}, {img.label[1]} on an incidence point", placed)
        point = tuple(complex(v) for v in img.triple)
        ledger.check("image in V(I3)", all(g.vanishes_at(point, settings.tolerance) for g in gens.I3))


def _mirror_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    px, py, pz = abelian_param(m, n)
    gens = ideal_generators(m, n, settings.window)
    rng = np.random.default_rng(settings.seed)
    for _ in range(min(settings.samples, 20)):
        t = complex(rng.uniform(-2.5, 2.5), rng.uniform(-0.5, 0.5))
        point = (px.eval(t), py.eval(t), pz.eval(t))
        ledger.check("C_1 parametrization", all(g.vanishes_at(point, settings.tolerance) for g in gens.I3))
    ledger.check("mirror involution", all(mirror(mirror(g)) == g for g in gens.J))
    if settings.window >= 1:
        matched, total = mirror_window_matches(m, n, settings.window)
        ledger.check("mirrored generators", matched == total, f"{matched}/{total}")
    else:
        ledger.skip("mirror window matching needs window >= 1")
    if m > 0 and n > 0:
        count = mirror_intersection_count(m, n)
        ledger.check("mirror intersection", count.enumerated == count.closed_form)
    else:
        ledger.skip("mirror intersection needs positive m and n")
    if n == 2 and m % 2 and m >= 3:
        model = planar_model_m2(m)
        for p in sample_variety(m, n, min(settings.samples, 20), settings.seed):
            a, b = map_to_plane(m, p)
            ledger.check("planar model", model.vanishes_at((a, b, 0j), settings.tolerance * 10))
    else:
        ledger.skip("planar model needs n = 2 and odd m >= 3")


def _appendix_suite(m: int, n: int, settings: Settings, ledger: _Ledger) -> None:
    report = verify_appendix(m, n, samples=settings.samples, seed=settings.seed, tol=settings.tolerance)
    ledger.extend(report.checks)


SUITES: Dict[SectionKind, Callable[[int, int, Settings, _Ledger], None]] = {
    "2": _families_suite,
    "3": _section3_suite,
    "4": _factorization_suite,
    "5": _matrix_suite,
    "6": _recover_suite,
    "7": _repvar_suite,
    "8": _mirror_suite,
    "appendix": _appendix_suite,
}


def run_suite(section: SectionKind, m: int, n: int, settings: Settings) -> SuiteResult:
    ledger = _Ledger()
    started = time.perf_counter()
    try:
        SUITES[section](m, n, settings, ledger)
    except CharVarError as exc:
        logger.warning("suite %s aborted for (%d, %d): %s", section, m, n, exc.detail)
        ledger.check("suite aborted", False, exc.detail)
    elapsed = time.perf_counter() - started
    logger.info("suite %s (%d, %d): %d checks, %d failures, %.2fs", section, m, n, ledger.count, len(ledger.failures), elapsed)
    return SuiteResult(
        name=section,
        passed=not ledger.failures,
        checks=ledger.count,
        failures=ledger.failures,
        skipped=ledger.skipped,
        elapsed=elapsed,
    )


# -----------------------------------------------------------------------------
# Last-run store
# -----------------------------------------------------------------------------
_LAST_RUNS: Dict[Tuple[int, int], VerifyState] = {}
_LAST_RUNS_LOCK = threading.Lock()


def get_last_run(m: int, n: int) -> Optional[VerifyState]:
    with _LAST_RUNS_LOCK:
        return _LAST_RUNS.get((m, n))


# -----------------------------------------------------------------------------
# Runner
# -----------------------------------------------------------------------------
def run_verify_system(
    sections: Optional[Sequence[str]],
    m: int,
    n: int,
    settings: Optional[Settings] = None,
) -> VerifyState:
    split_gcd(m, n)
    settings = settings or get_settings()
    picked = route_to_suites(sections)
    logger.info("verify (%d, %d): sections %s with %d workers", m, n, ",".join(picked), settings.workers)

    with ThreadPoolExecutor(max_workers=settings.workers) as pool:
        futures = [pool.submit(run_suite, s, m, n, settings) for s in picked]
        results = [f.result() for f in futures]

    state: VerifyState = {
        "m": m,
        "n": n,
        "sections": picked,
        "results": results,
        "passed": all(r.passed for r in results),
    }
    with _LAST_RUNS_LOCK:
        _LAST_RUNS[(m, n)] = state
    return state


if __name__ == "__main__":
    for result in run_verify_system(["all"], 6, 4)["results"]:
        status = "ok" if result.passed else "FAIL"
        print(f"[{result.name}] {status} {result.checks} checks ({result.elapsed:.2f}s)")
        for failure in result.failures:
            print(f"    {failure}")
