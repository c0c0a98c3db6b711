from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from services.errors import NotDivisible, TruncationError


class AlgebraKind(str, Enum):
    QUADRATIC = "quadratic"
    CUBIC = "cubic"


class AlgebraParams(BaseModel):
    """Numerical constants of a generic three-dimensional regular algebra."""

    model_config = ConfigDict(frozen=True)

    kind: AlgebraKind
    r_a: int
    iota_a: int
    central_degree: int

    @model_validator(mode="after")
    def _check_constants(self):
        expected = {
            AlgebraKind.QUADRATIC: (3, 1, 3),
            AlgebraKind.CUBIC: (2, 2, 4),
        }[self.kind]
        if (self.r_a, self.iota_a, self.central_degree) != expected:
            raise ValueError(
                f"{self.kind.value} algebras have (r_A, iota_A, central degree) = {expected}"
            )
        return self

    @classmethod
    def for_kind(cls, kind: Union[AlgebraKind, str]) -> "AlgebraParams":
        kind = AlgebraKind(kind)
        r_a = 3 if kind == AlgebraKind.QUADRATIC else 2
        iota_a = 4 - r_a
        return cls(kind=kind, r_a=r_a, iota_a=iota_a, central_degree=iota_a * r_a)

    @property
    def is_cubic(self) -> bool:
        return self.kind == AlgebraKind.CUBIC

    def ambient_denominator(self) -> "LaurentPoly":
        """(1-t)^3 for quadratic algebras, (1-t)^2 (1-t^2) for cubic ones."""
        one_minus_t = LaurentPoly.from_terms({0: 1, 1: -1})
        if self.is_cubic:
            return one_minus_t * one_minus_t * LaurentPoly.from_terms({0: 1, 2: -1})
        return one_minus_t * one_minus_t * one_minus_t


class LaurentPoly(BaseModel):
    """Exact Laurent polynomial stored densely from ``offset``."""

    model_config = ConfigDict(frozen=True)

    offset: int = 0
    coeffs: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        offset = int(data.get("offset", 0))
        coeffs = [int(c) for c in data.get("coeffs", ())]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        coeffs = coeffs[lead:]
        return {"offset": offset + lead if coeffs else 0, "coeffs": tuple(coeffs)}

    @classmethod
    def from_terms(cls, terms: Dict[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        low, high = min(terms), max(terms)
        return cls(offset=low, coeffs=[terms.get(e, 0) for e in range(low, high + 1)])

    @classmethod
    def monomial(cls, coefficient: int, exponent: int = 0) -> "LaurentPoly":
        return cls.from_terms({exponent: coefficient})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low_degree(self) -> int:
        return self.offset

    @property
    def degree(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        index = exponent - self.offset
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def terms(self) -> Dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        terms = self.terms()
        for e, c in other.terms().items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly.from_terms(terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(offset=self.offset, coeffs=[-c for c in self.coeffs])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(offset=self.offset, coeffs=[c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return LaurentPoly()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    product[i + j] += x * y
        return LaurentPoly(offset=self.offset + other.offset, coeffs=product)

    __rmul__ = __mul__

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by t^n."""
        if self.is_zero:
            return self
        return LaurentPoly(offset=self.offset + n, coeffs=self.coeffs)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def derivative_at_one(self) -> int:
        return sum((self.offset + i) * c for i, c in enumerate(self.coeffs))

    def times_one_minus_t(self) -> "LaurentPoly":
        terms = self.terms()
        out: Dict[int, int] = {}
        for e, c in terms.items():
            out[e] = out.get(e, 0) + c
            out[e + 1] = out.get(e + 1, 0) - c
        return LaurentPoly.from_terms(out)

    def divide_one_minus_t(self) -> "LaurentPoly":
        """Exact synthetic division by (1 - t); the quotient coefficients are partial sums."""
        if self.at_one() != 0:
            raise NotDivisible(f"{self.display()} does not vanish at t = 1")
        if self.is_zero:
            return self
        partial, quotient = 0, []
        for c in self.coeffs[:-1]:
            partial += c
            quotient.append(partial)
        return LaurentPoly(offset=self.offset, coeffs=quotient)

    def root_multiplicity_at_one(self) -> int:
        if self.is_zero:
            raise NotDivisible("the zero polynomial has no finite root multiplicity")
        poly, k = self, 0
        while poly.at_one() == 0:
            poly = poly.divide_one_minus_t()
            k += 1
        return k

    def display(self, var: str = "t") -> str:
        return format_terms(self.terms(), var)


def format_terms(terms: Dict[int, int], var: str = "t") -> str:
    """Render ``{exponent: coefficient}`` as ``t + 2t^2 - t^8`` (ascending exponents)."""
    pieces: List[str] = []
    for e in sorted(terms):
        c = terms[e]
        if c == 0:
            continue
        magnitude = abs(c)
        if e == 0:
            body = str(magnitude)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


class IntSeries(BaseModel):
    """Truncated integer Laurent series.

    Coefficients are stored densely from ``offset`` up to ``trunc_order - 1``;
    coefficients at ``trunc_order`` and beyond are unknown, not zero.
    """

    model_config = ConfigDict(frozen=True)

    offset: int
    coeffs: Tuple[int, ...]
    trunc_order: int

    @model_validator(mode="before")
    @classmethod
    def _canonical(cls, data: Any) -> Any:
        if not isinstance(data, dict) or "offset" not in data or "trunc_order" not in data:
            return data
        offset = int(data["offset"])
        coeffs = [int(c) for c in data.get("coeffs", ())]
        trunc_order = int(data["trunc_order"])
        if offset + len(coeffs) != trunc_order:
            raise ValueError("series must be stored densely from offset to trunc_order")
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        return {"offset": offset + lead, "coeffs": tuple(coeffs[lead:]), "trunc_order": trunc_order}

    @classmethod
    def from_poly(cls, poly: LaurentPoly, trunc_order: int) -> "IntSeries":
        low = poly.low_degree if not poly.is_zero else trunc_order
        low = min(low, trunc_order)
        return cls(
            offset=low,
            coeffs=[poly.coefficient(e) for e in range(low, trunc_order)],
            trunc_order=trunc_order,
        )

    @classmethod
    def from_coefficients(cls, coeffs: List[int], offset: int = 0) -> "IntSeries":
        return cls(offset=offset, coeffs=coeffs, trunc_order=offset + len(coeffs))

    @classmethod
    def inverse_of(cls, denominator: LaurentPoly, n_terms: int) -> "IntSeries":
        """First ``n_terms`` coefficients of 1/denominator by long division."""
        if denominator.low_degree != 0 or denominator.coefficient(0) not in (1, -1):
            raise NotDivisible("long division needs a denominator with constant term +-1")
        lead = denominator.coefficient(0)
        out: List[int] = []
        for n in range(n_terms):
            acc = 1 if n == 0 else 0
            for j in range(1, min(n, denominator.degree) + 1):
                acc -= denominator.coefficient(j) * out[n - j]
            out.append(acc * lead)
        return cls.from_coefficients(out)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> int:
        if exponent >= self.trunc_order:
            raise TruncationError(
                f"coefficient of t^{exponent} is unknown (series known below t^{self.trunc_order})"
            )
        if exponent < self.offset:
            return 0
        return self.coeffs[exponent - self.offset]

    def head(self, n_terms: int, start: Optional[int] = None) -> List[int]:
        start = self.offset if start is None else start
        return [self.coefficient(e) for e in range(start, start + n_terms)]

    def truncate(self, trunc_order: int) -> "IntSeries":
        if trunc_order > self.trunc_order:
            raise TruncationError("cannot extend a series beyond its known coefficients")
        low = min(self.offset, trunc_order)
        return IntSeries(
            offset=low,
            coeffs=[self.coefficient(e) for e in range(low, trunc_order)],
            trunc_order=trunc_order,
        )

    def _combine(self, other: "IntSeries", sign: int) -> "IntSeries":
        trunc_order = min(self.trunc_order, other.trunc_order)
        low = min(self.offset, other.offset, trunc_order)
        coeffs = [
            self.coefficient(e) + sign * other.coefficient(e) for e in range(low, trunc_order)
        ]
        return IntSeries(offset=low, coeffs=coeffs, trunc_order=trunc_order)

    def __add__(self, other: "IntSeries") -> "IntSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return self._combine(other, -1)

    def __mul__(self, other: Union["IntSeries", LaurentPoly, int]) -> "IntSeries":
        if isinstance(other, int):
            return IntSeries(
                offset=self.offset,
                coeffs=[c * other for c in self.coeffs],
                trunc_order=self.trunc_order,
            )
        if isinstance(other, LaurentPoly):
            return self.mul_poly(other)
        trunc_order = min(self.offset + other.trunc_order, other.offset + self.trunc_order)
        low = min(self.offset + other.offset, trunc_order)
        coeffs = []
        for n in range(low, trunc_order):
            acc = 0
            for i, x in enumerate(self.coeffs):
                e = self.offset + i
                if n - e < other.offset:
                    break
                acc += x * other.coefficient(n - e)
            coeffs.append(acc)
        return IntSeries(offset=low, coeffs=coeffs, trunc_order=trunc_order)

    def mul_poly(self, poly: LaurentPoly) -> "IntSeries":
        """Product with an exact polynomial; known below ``trunc_order + low_degree(poly)``."""
        if poly.is_zero:
            return IntSeries(offset=self.trunc_order, coeffs=(), trunc_order=self.trunc_order)
        trunc_order = self.trunc_order + poly.low_degree
        low = min(self.offset + poly.low_degree, trunc_order)
        terms = poly.terms()
        coeffs = [
            sum(c * self.coefficient(n - e) for e, c in terms.items() if n - e >= self.offset)
            for n in range(low, trunc_order)
        ]
        return IntSeries(offset=low, coeffs=coeffs, trunc_order=trunc_order)

    def display(self, n_terms: int, var: str = "t") -> str:
        terms = {e: self.coefficient(e) for e in range(self.offset, self.offset + n_terms)}
        return f"{format_terms(terms, var)} + ..."


class Multiplicity(BaseModel):
    """GK-dimension, multiplicity e and normalized multiplicity epsilon = iota_A * e."""

    model_config = ConfigDict(frozen=True)

    gkdim: int
    e: Fraction
    epsilon: int


class GeneralForm(BaseModel):
    """q = r + a(1 - t) - s(t)(1 - t)^2."""

    model_config = ConfigDict(frozen=True)

    r: int
    a: int
    s: LaurentPoly
