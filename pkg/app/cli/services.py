import argparse
import json
import math
from typing import Any, Callable, List, Optional, Sequence, TypeVar

from pydantic import ValidationError

from verify_system import run_verify_system, validate_section
from app.cli.schemas import (
    ChebyshevValue,
    CliConfig,
    CountsModel,
    DimensionsModel,
    FamilyFactor,
    FamilyResponse,
    IdealResponse,
    LineModel,
    MetabelianImageModel,
    MirrorCountModel,
    MirrorResponse,
    NumericCheck,
    PlanarResponse,
    Polynomial,
    RecoverResponse,
    ReduceResponse,
    RepVarResponse,
    SuiteModel,
    Term,
    TracePolyResponse,
    VarietyResponse,
    VerifyResponse,
)
from app.core.config import Settings
from app.core.errors import UsageError
from app.core.recover import recover
from app.core.repvar import count_repvar, distinct_images, metabelian_images
from app.core.traceword import Word, close_enough, eval_word, memo_size, random_pair, reduce_trace, relative_gap, trace_triple
from app.core.tripoly import F, TriPoly, mirror
from app.core.unipoly import FAMILIES, UniPoly, cyclotomic, factor_family, factor_sign, q_poly, r_poly
from app.core.variety import (
    VarietyReport,
    char_map_m2,
    ideal_generators,
    intersection_matrix,
    map_to_plane,
    mirror_intersection_count,
    mirror_window_matches,
    planar_model_m2,
    sample_variety,
)

R = TypeVar("R")

FAMILY_KINDS = ("f", "h", "s", "sigma", "cyclotomic", "r", "q")


def _guard(fn: Callable[..., R], *args: Any) -> R:
    """Runs a core call, turning precondition failures into usage errors."""
    try:
        return fn(*args)
    except ValueError as e:
        raise UsageError(str(e))


def _polynomial(p: TriPoly) -> Polynomial:
    return Polynomial(text=p.to_text(), terms=[Term(**t) for t in p.to_json()])


def build_config(args: argparse.Namespace, settings: Settings) -> CliConfig:
    try:
        return CliConfig(
            command=args.command,
            format=getattr(args, "format", None) or "text",
            seed=settings.seed if getattr(args, "seed", None) is None else args.seed,
            tolerance=settings.tolerance if getattr(args, "tol", None) is None else args.tol,
            window=settings.window if getattr(args, "window", None) is None else args.window,
            samples=settings.samples,
        )
    except ValidationError as e:
        raise UsageError(f"invalid options: {e.errors()[0]['msg']}")


# --- family ---

def family_service(kind: str, k: int, factor: bool = False, theta: Optional[float] = None) -> FamilyResponse:
    if kind in FAMILIES:
        poly = FAMILIES[kind](k)
    elif kind == "cyclotomic":
        poly = _guard(cyclotomic, k)
    elif kind == "r":
        poly = _guard(r_poly, k)
    elif kind == "q":
        poly = _guard(q_poly, k)
    else:
        raise UsageError(f"unknown family {kind!r}; choose from {', '.join(FAMILY_KINDS)}")

    response = FamilyResponse(kind=kind, index=k, text=poly.to_text(), coeffs=poly.to_json(), degree=poly.degree)
    if factor:
        if kind not in ("f", "s", "sigma"):
            raise UsageError(f"--factor is only available for f, s, sigma, not {kind}")
        factors = _guard(factor_family, kind, k)
        response.sign = factor_sign(kind, k)
        response.factors = [FamilyFactor(ell=ell, text=q.to_text(), coeffs=q.to_json()) for ell, q in factors]
    if theta is not None:
        response.chebyshev = _chebyshev(kind, k, poly, theta)
    return response


def _chebyshev(kind: str, k: int, poly: UniPoly, theta: float) -> ChebyshevValue:
    value = poly.eval(2 * math.cos(theta))
    if kind == "f":
        closed = 2 * math.cos(k * theta)
    elif kind == "h":
        if math.isclose(math.sin(theta), 0.0, abs_tol=1e-12):
            raise UsageError("--theta must avoid multiples of pi for h")
        closed = math.sin(k * theta) / math.sin(theta)
    else:
        raise UsageError(f"--theta is only available for f and h, not {kind}")
    return ChebyshevValue(theta=theta, value=float(value), closedForm=closed)


# --- trace-poly / reduce ---

def trace_poly_service(a: int, b: int) -> TracePolyResponse:
    word = Word((("x", a), ("y", -b)))
    return TracePolyResponse(a=a, b=b, word=word.to_text(), poly=_polynomial(F(a, b)))


def reduce_service(text: str, check: bool, config: CliConfig) -> ReduceResponse:
    word = _guard(Word.parse, text)
    poly = reduce_trace(word)
    response = ReduceResponse(word=word.to_text(), canonical=word.canonical().to_text(), poly=_polynomial(poly), memoSize=memo_size())
    if check:
        A, B = random_pair(config.seed)
        x, y, z = trace_triple(A, B)
        exact = eval_word(word, A, B)
        approx = poly.eval(x, y, z)
        response.check = NumericCheck(
            seed=config.seed,
            exact=f"{exact:.12g}",
            approx=f"{approx:.12g}",
            relativeGap=relative_gap(exact, approx),
            passed=close_enough(exact, approx, config.tolerance),
        )
        response.passed = response.check.passed
    return response


# --- ideal ---

def ideal_service(m: int, n: int, config: CliConfig) -> IdealResponse:
    gens = _guard(ideal_generators, m, n, config.window)
    return IdealResponse(
        m=m,
        n=n,
        window=config.window,
        coreSize=gens.core_size,
        J=[g.to_text() for g in gens.J],
        I1=[g.to_text() for g in gens.I1],
        I2=[g.to_text() for g in gens.I2],
        I3Extra=gens.I3_extra.to_text(),
    )


# --- variety ---

def variety_report(m: int, n: int) -> VarietyReport:
    return _guard(intersection_matrix, m, n)


def variety_service(report: VarietyReport) -> VarietyResponse:
    d = report.d
    lines = [
        LineModel(
            family=line.family,
            xAngle=str(line.xcoord.angle),
            yAngle=str(line.ycoord.angle),
            x=line.a,
            y=line.b,
            components=[c1.label(d), c2.label(d)],
        )
        for line, (c1, c2) in zip(report.lines, report.incidence)
    ]
    counts = report.counts
    return VarietyResponse(
        m=report.m,
        n=report.n,
        d=d,
        mPrime=report.m_prime,
        nPrime=report.n_prime,
        components=[c.label(d) for c in report.components],
        lines=lines,
        matrix=report.matrix,
        rowSums=report.row_sums,
        incidencePoints=report.incidence_points,
        counts=CountsModel(lines=counts.lines, abelian=counts.abelian, total=counts.total, genus=counts.genus),
    )


# --- recover ---

def parse_matrix(raw: str) -> List[List[int]]:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise UsageError(f"--matrix is not valid JSON: {e}")
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise UsageError("--matrix must be a JSON list of rows, e.g. [[1,6],[6,1]]")
    for row in data:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise UsageError(f"--matrix entries must be integers, got {v!r}")
    return data


def recover_service(raw: str) -> RecoverResponse:
    result = recover(parse_matrix(raw))
    return RecoverResponse(
        verdict=result.verdict,
        pairs=[list(p) for p in result.pairs],
        constraint=result.constraint,
        detail=result.detail,
    )


# --- repvar ---

def repvar_service(m: int, n: int) -> RepVarResponse:
    report = _guard(count_repvar, m, n)
    images = metabelian_images(m, n)
    irr, ab, metabelian = report.dimensions
    return RepVarResponse(
        m=m,
        n=n,
        d=report.d,
        irrComponents=report.irr_components,
        abComponents=report.ab_components,
        total=report.total,
        metabelianComponents=report.metabelian_components,
        distinctImages=distinct_images(images),
        dimensions=DimensionsModel(irr=irr, ab=ab, metabelian=metabelian),
        bezout=list(report.bezout),
        images=[
            MetabelianImageModel(
                xi=str(img.label[0].angle),
                eta=str(img.label[1].angle),
                triple=list(img.triple),
                family=img.line.family,
                xAngle=str(img.line.xcoord.angle),
                yAngle=str(img.line.ycoord.angle),
                component=img.component.label(report.d),
            )
            for img in images
        ],
    )


# --- mirror / planar ---

def mirror_service(m: int, n: int, config: CliConfig) -> MirrorResponse:
    gens = _guard(ideal_generators, m, n, config.window)
    matched, total = mirror_window_matches(m, n, config.window)
    intersection = None
    if m > 0 and n > 0:
        count = mirror_intersection_count(m, n)
        intersection = MirrorCountModel(enumerated=count.enumerated, closedForm=count.closed_form)
    return MirrorResponse(
        m=m,
        n=n,
        window=config.window,
        images=[mirror(g).to_text() for g in gens.J],
        matched=matched,
        total=total,
        intersection=intersection,
    )


def planar_service(m: int, config: CliConfig) -> PlanarResponse:
    model = _guard(planar_model_m2, m)
    first, second = char_map_m2(m)
    points = sample_variety(m, 2, min(config.samples, 20), config.seed)
    passed = all(model.vanishes_at((*map_to_plane(m, p), 0j), config.tolerance * 10) for p in points)
    return PlanarResponse(
        m=m,
        model=model.to_text(),
        charMap=[first.to_text(), second.to_text()],
        samples=len(points),
        passed=passed,
    )


# --- verify ---

def verify_service(sections: Sequence[str], m: int, n: int, config: CliConfig, settings: Settings) -> VerifyResponse:
    for section in sections:
        problem = validate_section(section)
        if problem:
            raise UsageError(problem)
    merged = Settings(
        seed=config.seed,
        tolerance=config.tolerance,
        window=config.window,
        workers=settings.workers,
        samples=config.samples,
        log_level=settings.log_level,
    )
    state = _guard(run_verify_system, list(sections), m, n, merged)
    return VerifyResponse(
        m=m,
        n=n,
        passed=state["passed"],
        suites=[
            SuiteModel(name=r.name, passed=r.passed, checks=r.checks, failures=r.failures, skipped=r.skipped)
            for r in state["results"]
        ],
    )
