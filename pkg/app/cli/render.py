from typing import Callable, Dict, List, Type

import networkx as nx
from pydantic import BaseModel

from app.cli.schemas import (
    FamilyResponse,
    IdealResponse,
    MirrorResponse,
    PlanarResponse,
    RecoverResponse,
    ReduceResponse,
    RepVarResponse,
    TracePolyResponse,
    VarietyResponse,
    VerifyResponse,
)
from app.core.variety import VarietyReport, incidence_graph


def _family(r: FamilyResponse) -> List[str]:
    out = [f"{r.kind}_{r.index} = {r.text}", f"degree {r.degree}"]
    if r.factors is not None:
        out.append(f"sign {r.sign}")
        out.extend(f"  q[{f.ell}] = {f.text}" for f in r.factors)
    if r.chebyshev is not None:
        c = r.chebyshev
        out.append(f"at 2cos({c.theta!r}): {c.value!r} (closed form {c.closedForm!r})")
    return out


def _trace_poly(r: TracePolyResponse) -> List[str]:
    return [f"F({r.a}, {r.b}) = tr({r.word}) = {r.poly.text}"]


def _reduce(r: ReduceResponse) -> List[str]:
    out = [f"tr({r.word}) = {r.poly.text}"]
    if r.check is not None:
        c = r.check
        status = "ok" if c.passed else "MISMATCH"
        out.append(f"check seed={c.seed}: matrices {c.exact}, polynomial {c.approx}, gap {c.relativeGap:.3e} {status}")
    return out


def _ideal(r: IdealResponse) -> List[str]:
    out = [f"J (window {r.window}, {len(r.J)} generators):"]
    out.extend(f"  {g}" for g in r.J)
    out.append("I1:")
    out.extend(f"  {g}" for g in r.I1)
    out.append("I2:")
    out.extend(f"  {g}" for g in r.I2)
    out.append(f"I3 = J + ({r.I3Extra})")
    return out


def _variety(r: VarietyResponse) -> List[str]:
    c = r.counts
    out = [
        f"X(G_{r.m},{r.n}): d={r.d} m'={r.mPrime} n'={r.nPrime}",
        f"lines {c.lines}, abelian {c.abelian}, total {c.total}" + (f", genus {c.genus}" if c.genus is not None else ""),
        "components: " + " ".join(r.components),
        "matrix:",
    ]
    out.extend("  " + " ".join(str(v) for v in row) for row in r.matrix)
    out.append("row sums: " + " ".join(str(v) for v in r.rowSums))
    out.append(f"incidence points: {r.incidencePoints}")
    out.extend(f"  {ln.family} a=2cos(2pi*{ln.xAngle}) b=2cos(2pi*{ln.yAngle}) -> {ln.components[0]}, {ln.components[1]}" for ln in r.lines)
    return out


def _recover(r: RecoverResponse) -> List[str]:
    out = [f"verdict: {r.verdict}"]
    out.extend(f"  ({m}, {n})" for m, n in r.pairs)
    if r.constraint:
        out.append(f"constraint: {r.constraint}")
    if r.detail:
        out.append(f"detail: {r.detail}")
    return out


def _repvar(r: RepVarResponse) -> List[str]:
    out = [
        f"R(G_{r.m},{r.n}): d={r.d}",
        f"irreducible {r.irrComponents} (dim {r.dimensions.irr}), abelian {r.abComponents} (dim {r.dimensions.ab}), total {r.total}",
        f"metabelian {r.metabelianComponents} (dim {r.dimensions.metabelian}), distinct images {r.distinctImages}",
        f"bezout: {r.bezout[0]}*m - {r.bezout[1]}*n = {r.d}",
    ]
    out.extend(f"  xi={img.xi} eta={img.eta} -> {img.family} ({img.xAngle}, {img.yAngle}) on {img.component}" for img in r.images)
    return out


def _mirror(r: MirrorResponse) -> List[str]:
    out = [f"psi(J) for ({r.m}, {r.n}), window {r.window}: {r.matched}/{r.total} in J of ({r.m}, {-r.n})"]
    out.extend(f"  {g}" for g in r.images)
    if r.intersection is not None:
        out.append(f"intersection points: {r.intersection.enumerated} (closed form {r.intersection.closedForm})")
    return out


def _planar(r: PlanarResponse) -> List[str]:
    return [
        f"K_{r.m},2 model: {r.model}",
        f"map: ({r.charMap[0]}, {r.charMap[1]})",
        f"samples {r.samples}: {'ok' if r.passed else 'FAIL'}",
    ]


def _verify(r: VerifyResponse) -> List[str]:
    out: List[str] = []
    for s in r.suites:
        out.append(f"[{s.name}] {'ok' if s.passed else 'FAIL'} {s.checks} checks")
        out.extend(f"    {f}" for f in s.failures)
        out.extend(f"    skipped: {reason}" for reason in s.skipped)
    out.append("all passed" if r.passed else "FAILED")
    return out


TEXT_RENDERERS: Dict[Type[BaseModel], Callable] = {
    FamilyResponse: _family,
    TracePolyResponse: _trace_poly,
    ReduceResponse: _reduce,
    IdealResponse: _ideal,
    VarietyResponse: _variety,
    RecoverResponse: _recover,
    RepVarResponse: _repvar,
    MirrorResponse: _mirror,
    PlanarResponse: _planar,
    VerifyResponse: _verify,
}


def render_text(model: BaseModel) -> str:
    return "\n".join(TEXT_RENDERERS[type(model)](model))


def render_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2)


def render_dot(report: VarietyReport) -> str:
    return nx.nx_pydot.to_pydot(incidence_graph(report)).to_string()


def render(model: BaseModel, fmt: str) -> str:
    if fmt == "json":
        return render_json(model)
    return render_text(model)
