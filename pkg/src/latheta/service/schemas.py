"""Request and response models for the HTTP service.

Rationals cross the wire as 'p/q' strings so nothing is ever rounded.
A lattice (or code) argument is either a registry label or an inline
object, never both.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class LatticeJson(BaseModel):
    label: Optional[str] = None
    dim: int
    gram: List[List[str]]


class CodeJson(BaseModel):
    label: Optional[str] = None
    q: int
    n: int
    generator: List[List[int]]


class LatticeRef(BaseModel):
    label: Optional[str] = None
    lattice: Optional[LatticeJson] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.label is None) == (self.lattice is None):
            raise ValueError("provide exactly one of 'label' or 'lattice'")
        return self


class CodeRef(BaseModel):
    label: Optional[str] = None
    code: Optional[CodeJson] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.label is None) == (self.code is None):
            raise ValueError("provide exactly one of 'label' or 'code'")
        return self


class ThetaRequest(LatticeRef):
    bound: str = Field(description="squared norm cutoff, rational 'p/q'")


class GtsRequest(LatticeRef):
    r: int = 2
    m_max: int = 1


class NormsRequest(LatticeRef):
    pass


class StableRequest(LatticeRef):
    pass


class RatioRequest(LatticeRef):
    tau: Optional[float] = None
    tau_min: float = 0.25
    tau_max: float = 4.0
    points: int = 200
    scan: bool = False
    tol: float = 1e-9


class SymmetryRequest(LatticeRef):
    tau0: float = 1.0
    taus: Optional[List[float]] = None
    tol: float = 1e-9


class GhwRequest(CodeRef):
    r: Optional[int] = None


class ConstructaRequest(CodeRef):
    pass


class PaperReproRequest(BaseModel):
    strict_gts_example3: bool = False


class ErrorBody(BaseModel):
    kind: str  # "input" | "capacity" | "internal"
    message: str


class ScanPoint(BaseModel):
    tau: float
    delta: float


class RatioResponse(BaseModel):
    dim: int
    tau: Optional[float] = None
    delta: Optional[float] = None
    scan: Optional[List[ScanPoint]] = None


class SymmetryPair(BaseModel):
    t: float
    delta_up: float
    delta_down: float
    deviation: float


class SymmetryResponse(BaseModel):
    tau0: float
    max_deviation: float
    symmetric: bool
    pairs: List[SymmetryPair]


class GhwResponse(BaseModel):
    label: Optional[str] = None
    k: int
    r: Optional[int] = None
    value: Optional[int] = None
    hierarchy: Optional[List[int]] = None


class ConstructaResponse(BaseModel):
    lattice: LatticeJson
    volume_sq: str
