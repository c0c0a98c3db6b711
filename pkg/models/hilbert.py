from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from models.algebra import AlgebraKind, AlgebraParams, LaurentPoly, format_terms
from models.betti import BettiPair


class SPoly(BaseModel):
    """The polynomial s(t) = s_0 + s_1 t + ... classifying a Hilbert series."""

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            data = {"coeffs": data}
        if not isinstance(data, dict):
            return data
        coeffs = [int(c) for c in data.get("coeffs", ())]
        if any(c < 0 for c in coeffs):
            raise ValueError("s(t) has non-negative coefficients")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return {"coeffs": tuple(coeffs)}

    @classmethod
    def parse(cls, text: str) -> "SPoly":
        """Parse a comma separated coefficient list such as ``"3,2,1"``."""
        text = text.strip()
        if not text:
            return cls()
        return cls(coeffs=[int(part) for part in text.split(",")])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly(offset=0, coeffs=self.coeffs)

    def display(self) -> str:
        return format_terms(dict(enumerate(self.coeffs)))

    def is_cm_admissible(self, epsilon: int) -> bool:
        chain = (epsilon,) + self.coeffs
        return epsilon > self.coefficient(0) and all(
            x >= y for x, y in zip(chain[1:], chain[2:])
        )

    def is_critical_admissible(self, epsilon: int, params: AlgebraParams) -> bool:
        chain = (epsilon,) + self.coeffs
        if epsilon < 1 or not all(x > y for x, y in zip(chain, chain[1:])):
            return False
        return not (params.is_cubic and epsilon > 1 and self.is_zero)

    def is_admissible(self, epsilon: int, params: AlgebraParams, critical: bool) -> bool:
        if critical:
            return self.is_critical_admissible(epsilon, params)
        return self.is_cm_admissible(epsilon)


class HilbertClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: AlgebraParams
    epsilon: PositiveInt
    s: SPoly = SPoly()
    critical: bool = True


class TableRow(BaseModel):
    s: Tuple[int, ...]
    series: List[int]
    resolutions: List[BettiPair]
    empty: bool = False
    note: Optional[str] = None


class EpsilonTable(BaseModel):
    kind: AlgebraKind
    epsilon: int
    rows: List[TableRow]


class AppendixReport(BaseModel):
    kind: AlgebraKind
    eps_max: int
    tables: List[EpsilonTable]


class Classification(BaseModel):
    """Hilbert class of Betti data after translating it to start in degree zero."""

    model_config = ConfigDict(frozen=True)

    shift: int
    hilbert_class: HilbertClass
