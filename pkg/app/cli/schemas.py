from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

OutputFormat = Literal["text", "json", "dot"]

# --- Config ---

class CliConfig(BaseModel):
    command: str
    format: OutputFormat = "text"
    seed: int = 0
    tolerance: float = Field(default=1e-8, gt=0)
    window: int = Field(default=2, ge=0)
    samples: int = Field(default=100, ge=1)

    @model_validator(mode="after")
    def dot_only_for_variety(self) -> "CliConfig":
        if self.format == "dot" and self.command != "variety":
            raise ValueError(f"--format dot is only available for variety, not {self.command}")
        return self

# --- Shared ---

class Term(BaseModel):
    i: int
    j: int
    k: int
    coeff: str

class Polynomial(BaseModel):
    text: str
    terms: List[Term]

# --- family ---

class FamilyFactor(BaseModel):
    ell: int
    text: str
    coeffs: List[str]

class ChebyshevValue(BaseModel):
    theta: float
    value: float
    closedForm: float

class FamilyResponse(BaseModel):
    kind: str
    index: int
    text: str
    coeffs: List[str]
    degree: int
    sign: Optional[int] = None
    factors: Optional[List[FamilyFactor]] = None
    chebyshev: Optional[ChebyshevValue] = None

# --- trace-poly / reduce ---

class TracePolyResponse(BaseModel):
    a: int
    b: int
    word: str
    poly: Polynomial

class NumericCheck(BaseModel):
    seed: int
    exact: str
    approx: str
    relativeGap: float
    passed: bool

class ReduceResponse(BaseModel):
    word: str
    canonical: str
    poly: Polynomial
    memoSize: int
    check: Optional[NumericCheck] = None
    passed: bool = True

# --- ideal ---

class IdealResponse(BaseModel):
    m: int
    n: int
    window: int
    coreSize: int
    J: List[str]
    I1: List[str]
    I2: List[str]
    I3Extra: str

# --- variety ---

class LineModel(BaseModel):
    family: str
    xAngle: str
    yAngle: str
    x: float
    y: float
    components: List[str]

class CountsModel(BaseModel):
    lines: int
    abelian: int
    total: int
    genus: Optional[int] = None

class VarietyResponse(BaseModel):
    m: int
    n: int
    d: int
    mPrime: int
    nPrime: int
    components: List[str]
    lines: List[LineModel]
    matrix: List[List[int]]
    rowSums: List[int]
    incidencePoints: int
    counts: CountsModel

# --- recover ---

class RecoverResponse(BaseModel):
    verdict: Literal["unique", "ambiguous", "underdetermined", "invalid"]
    pairs: List[List[int]] = Field(default_factory=list)
    constraint: Optional[str] = None
    detail: Optional[str] = None

# --- repvar ---

class DimensionsModel(BaseModel):
    irr: int
    ab: int
    metabelian: int

class MetabelianImageModel(BaseModel):
    xi: str
    eta: str
    triple: List[float]
    family: str
    xAngle: str
    yAngle: str
    component: str

class RepVarResponse(BaseModel):
    m: int
    n: int
    d: int
    irrComponents: int
    abComponents: int
    total: int
    metabelianComponents: int
    distinctImages: int
    dimensions: DimensionsModel
    bezout: List[int]
    images: List[MetabelianImageModel]

# --- mirror / planar ---

class MirrorCountModel(BaseModel):
    enumerated: int
    closedForm: int

class MirrorResponse(BaseModel):
    m: int
    n: int
    window: int
    images: List[str]
    matched: int
    total: int
    intersection: Optional[MirrorCountModel] = None

class PlanarResponse(BaseModel):
    m: int
    model: str
    charMap: List[str]
    samples: int
    passed: bool

# --- verify ---

class SuiteModel(BaseModel):
    name: str
    passed: bool
    checks: int
    failures: List[str]
    skipped: List[str]

class VerifyResponse(BaseModel):
    m: int
    n: int
    passed: bool
    suites: List[SuiteModel]
