from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from models.algebra import AlgebraParams

# sigma acts on the point model as translation by XI
XI = (0, 1)

Terms = Tuple[Tuple[int, int, int], ...]


class PointModel(BaseModel):
    """A point of E, modelled as an element of the free abelian group Z^2."""

    model_config = ConfigDict(frozen=True)

    x: int
    y: int

    @model_validator(mode="before")
    @classmethod
    def _from_pair(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            x, y = data
            return {"x": x, "y": y}
        return data

    def __add__(self, other: "PointModel") -> "PointModel":
        return PointModel(x=self.x + other.x, y=self.y + other.y)

    def scaled(self, k: int) -> "PointModel":
        return PointModel(x=k * self.x, y=k * self.y)

    def translated(self, n: int) -> "PointModel":
        """Apply sigma^n."""
        return PointModel(x=self.x + n * XI[0], y=self.y + n * XI[1])

    def as_pair(self) -> Tuple[int, int]:
        return (self.x, self.y)


ORIGIN = PointModel(x=0, y=0)


class FormalDivisor(BaseModel):
    """Finitely supported integer combination of points.

    Terms are kept as sorted ``(x, y, multiplicity)`` triples with no zero
    multiplicities, which is also the JSON form.
    """

    model_config = ConfigDict(frozen=True)

    terms: Terms = ()

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data: Any) -> Any:
        if isinstance(data, (list, tuple)):
            data = {"terms": data}
        if not isinstance(data, dict):
            return data
        merged: Dict[Tuple[int, int], int] = {}
        for term in data.get("terms", ()):
            x, y, mult = (int(v) for v in term)
            merged[(x, y)] = merged.get((x, y), 0) + mult
        return {"terms": tuple(sorted((x, y, m) for (x, y), m in merged.items() if m))}

    @classmethod
    def from_points(cls, points: Dict[PointModel, int]) -> "FormalDivisor":
        return cls(terms=[(p.x, p.y, m) for p, m in points.items()])

    def support(self) -> Dict[PointModel, int]:
        return {PointModel(x=x, y=y): m for x, y, m in self.terms}

    def multiplicity(self, point: PointModel) -> int:
        for x, y, m in self.terms:
            if (x, y) == (point.x, point.y):
                return m
        return 0


class CurveDescriptor(BaseModel):
    """Numerical shadow of a curve module: its algebra, epsilon and divisor."""

    model_config = ConfigDict(frozen=True)

    params: AlgebraParams
    epsilon: PositiveInt
    div: FormalDivisor

    @model_validator(mode="after")
    def _degree_matches(self):
        degree = sum(m for _, _, m in self.div.terms)
        if degree != self.params.r_a * self.epsilon:
            raise ValueError(
                f"divisor degree {degree} differs from r_A * epsilon = {self.params.r_a * self.epsilon}"
            )
        return self


class SectionDimKind(str, Enum):
    EXACT = "exact"
    AT_MOST_ONE = "at_most_one"


class SectionSpaceDim(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: SectionDimKind
    value: Optional[int] = None

    @classmethod
    def exact(cls, value: int) -> "SectionSpaceDim":
        return cls(kind=SectionDimKind.EXACT, value=value)

    @classmethod
    def at_most_one(cls) -> "SectionSpaceDim":
        return cls(kind=SectionDimKind.AT_MOST_ONE)

    def display(self) -> str:
        if self.kind == SectionDimKind.EXACT:
            return str(self.value)
        return "<= 1"


def divisor_json(divisor: FormalDivisor) -> List[List[int]]:
    return [list(term) for term in divisor.terms]
