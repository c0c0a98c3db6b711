from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

Counts = Tuple[Tuple[int, int], ...]


def _canonical_counts(raw: Any, side: str) -> Counts:
    if isinstance(raw, Mapping):
        items = list(raw.items())
    else:
        items = [tuple(item) for item in raw]
    seen: Dict[int, int] = {}
    for item in items:
        if len(item) != 2:
            raise ValueError(f"{side}: entries must be [degree, count] pairs")
        degree, count = int(item[0]), int(item[1])
        if count < 0:
            raise ValueError(f"{side}: count at degree {degree} is negative")
        if degree in seen:
            raise ValueError(f"{side}: degree {degree} listed twice")
        seen[degree] = count
    return tuple(sorted((d, c) for d, c in seen.items() if c))


class BettiPair(BaseModel):
    """Graded Betti numbers (a_i), (b_i) of a length-one free resolution.

    Stored as sorted ``(degree, count)`` pairs without zero counts; on the wire
    this is ``{"a": [[degree, count], ...], "b": [...]}``.
    """

    model_config = ConfigDict(frozen=True)

    a: Counts = ()
    b: Counts = ()

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        a = _canonical_counts(data.get("a", ()), "a")
        b = _canonical_counts(data.get("b", ()), "b")
        if bool(a) != bool(b):
            raise ValueError("a and b may only be empty together")
        return {"a": a, "b": b}

    @classmethod
    def from_counts(cls, a_counts: Sequence[int], b_counts: Sequence[int], start: int = 0) -> "BettiPair":
        """Build from dense count vectors indexed from ``start`` (no re-validation)."""
        a = tuple((start + i, c) for i, c in enumerate(a_counts) if c)
        b = tuple((start + i, c) for i, c in enumerate(b_counts) if c)
        return cls.model_construct(a=a, b=b)

    @property
    def is_empty(self) -> bool:
        return not self.a and not self.b

    @property
    def m(self) -> int:
        return sum(c for _, c in self.a)

    @property
    def n(self) -> int:
        return sum(c for _, c in self.b)

    def a_map(self) -> Dict[int, int]:
        return dict(self.a)

    def b_map(self) -> Dict[int, int]:
        return dict(self.b)

    def q_terms(self) -> Dict[int, int]:
        q = dict(self.a)
        for d, c in self.b:
            q[d] = q.get(d, 0) - c
        return {d: c for d, c in q.items() if c}

    def shifted(self, offset: int) -> "BettiPair":
        """Betti numbers of the shifted module M(-offset)."""
        return BettiPair(
            a=[(d + offset, c) for d, c in self.a],
            b=[(d + offset, c) for d, c in self.b],
        )


class StairSeq(BaseModel):
    """The non-decreasing sequence S(c); ``at`` is 1-indexed."""

    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, index: int) -> int:
        if not 1 <= index <= len(self.entries):
            raise IndexError(f"staircase index {index} outside 1..{len(self.entries)}")
        return self.entries[index - 1]


class DegreeMatrix(BaseModel):
    """S_{alpha beta} = S(b)_beta - S(a)_alpha, 1-indexed through ``at``."""

    model_config = ConfigDict(frozen=True)

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def at(self, alpha: int, beta: int) -> int:
        return self.entries[alpha - 1][beta - 1]

    def all_equal(self, value: int) -> bool:
        return all(entry == value for row in self.entries for entry in row)


class Ladder(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int
    n: int
    member: Tuple[Tuple[bool, ...], ...]

    @model_validator(mode="after")
    def _ladder_axiom(self):
        for alpha in range(1, self.m + 1):
            for beta in range(1, self.n + 1):
                if self.contains(alpha, beta):
                    continue
                below = alpha < self.m and self.contains(alpha + 1, beta)
                left = beta > 1 and self.contains(alpha, beta - 1)
                if below or left:
                    raise ValueError(f"cell ({alpha}, {beta}) breaks the ladder axiom")
        return self

    def contains(self, alpha: int, beta: int) -> bool:
        return self.member[alpha - 1][beta - 1]

    def cells(self) -> List[Tuple[int, int]]:
        return [
            (alpha, beta)
            for alpha in range(1, self.m + 1)
            for beta in range(1, self.n + 1)
            if self.contains(alpha, beta)
        ]


class CheckForm(str, Enum):
    Q = "q"
    AB = "ab"
    LADDER = "ladder"


class ShapeMode(str, Enum):
    CM = "cm"
    CRITICAL = "critical"
    BORDERED = "bordered"


class ShapeGrid(BaseModel):
    """Nonzero pattern of a generic presentation matrix.

    A cell holds 0 for a forced zero and the entry degree (always >= 1) otherwise.
    """

    model_config = ConfigDict(frozen=True)

    rows: int
    cols: int
    cells: Tuple[Tuple[int, ...], ...]

    def entry(self, alpha: int, beta: int) -> Optional[int]:
        value = self.cells[alpha - 1][beta - 1]
        return value or None

    def nonzero_cells(self) -> List[Tuple[int, int]]:
        return [
            (alpha, beta)
            for alpha in range(1, self.rows + 1)
            for beta in range(1, self.cols + 1)
            if self.cells[alpha - 1][beta - 1]
        ]


class Violation(BaseModel):
    """First condition a Betti pair fails, labelled within its condition set."""

    model_config = ConfigDict(frozen=True)

    form: CheckForm
    condition: str
    message: str


class SweepReport(BaseModel):
    """Outcome of an exhaustive sweep comparing the checker forms."""

    checked: int = 0
    accepted_cm: int = 0
    accepted_critical: int = 0
    disagreements: List[BettiPair] = []
    critical_not_cm: List[BettiPair] = []
