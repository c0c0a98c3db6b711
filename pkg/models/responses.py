from typing import Dict, List, Optional, Tuple, Type

from pydantic import BaseModel

from models.algebra import AlgebraKind
from models.betti import BettiPair, CheckForm, ShapeGrid, Violation
from models.divisor import SectionSpaceDim
from models.hilbert import EpsilonTable


class ErrorResponse(BaseModel):
    error: str
    detail: str


class SeriesResponse(BaseModel):
    kind: AlgebraKind
    offset: int
    coeffs: List[int]
    trunc_order: int
    epsilon: int
    s: List[int]
    shift: int
    e: str
    gkdim: int


class CheckResponse(BaseModel):
    kind: AlgebraKind
    critical: bool
    form: CheckForm
    verdict: str
    violation: Optional[Violation] = None
    shape: Optional[ShapeGrid] = None


class HilbertListing(BaseModel):
    kind: AlgebraKind
    epsilon: int
    critical: bool
    max_degree: Optional[int] = None
    polys: List[List[int]]
    count: int


class BettiListing(BaseModel):
    kind: AlgebraKind
    epsilon: int
    s: List[int]
    critical: bool
    resolutions: List[BettiPair]
    count: int


class CountResponse(BaseModel):
    kind: AlgebraKind
    epsilon: int
    mode: str
    critical: bool
    count: int
    verified: Optional[bool] = None


class TablesResponse(BaseModel):
    tables: List[EpsilonTable]
    golden_match: Optional[bool] = None


class PartitionRow(BaseModel):
    m: int
    total: int
    expected: int
    ok: bool


class PartitionIdentityResponse(BaseModel):
    m_max: int
    rows: List[PartitionRow]
    ok: bool


class DivisorResponse(BaseModel):
    operation: str
    divisor: Optional[List[List[int]]] = None
    point: Optional[Tuple[int, int]] = None
    value: Optional[int] = None
    equivalent: Optional[bool] = None
    epsilon: Optional[int] = None
    section_dim: Optional[SectionSpaceDim] = None


RESPONSE_MODELS: Dict[str, Type[BaseModel]] = {
    "series": SeriesResponse,
    "check": CheckResponse,
    "enumerate-hilbert": HilbertListing,
    "enumerate-betti": BettiListing,
    "count": CountResponse,
    "tables": TablesResponse,
    "partition-identity": PartitionIdentityResponse,
    "divisor": DivisorResponse,
    "error": ErrorResponse,
}
