"""Plain-text renderers shared by the CLI commands and the golden tables."""

from typing import Iterable, List

from models.algebra import Multiplicity, format_terms
from models.betti import BettiPair, ShapeGrid, Violation
from models.divisor import FormalDivisor, PointModel
from models.hilbert import AppendixReport, SPoly
from models.responses import PartitionRow

EMPTY_ROW = "∅"
ARROW = " → "


def render_coefficients(coeffs: Iterable[int]) -> str:
    return " ".join(str(c) for c in coeffs) + " ..."


def render_series_terms(coeffs: List[int]) -> str:
    return f"{format_terms(dict(enumerate(coeffs)))} + ..."


def render_free_module(counts: Iterable) -> str:
    """``A(-1)^2 ⊕ A(-2)`` for counts {1: 2, 2: 1}; A(0) is written A."""
    pieces = []
    for degree, count in counts:
        base = "A" if degree == 0 else f"A({-degree})"
        pieces.append(base if count == 1 else f"{base}^{count}")
    return " ⊕ ".join(pieces)


def render_resolution(betti: BettiPair) -> str:
    return ARROW.join(["0", render_free_module(betti.b), render_free_module(betti.a), "M", "0"])


def render_classification(epsilon: int, s: SPoly, shift: int, multiplicity: Multiplicity) -> str:
    return (
        f"epsilon = {epsilon}, s(t) = {s.display()}, shift = {shift}, "
        f"e = {multiplicity.e}, gkdim = {multiplicity.gkdim}"
    )


def render_violation(violation: Violation) -> str:
    return f"{violation.condition} [{violation.form.value}]: {violation.message}"


def render_shape(grid: ShapeGrid) -> str:
    width = max((len(str(c)) for row in grid.cells for c in row), default=1)
    lines = []
    for row in grid.cells:
        lines.append(" ".join(("." if c == 0 else str(c)).rjust(width) for c in row))
    return "\n".join(lines)


def render_appendix(report: AppendixReport) -> str:
    lines = [f"# {report.kind.value} algebra, epsilon <= {report.eps_max}"]
    for table in report.tables:
        lines.append("")
        lines.append(f"epsilon = {table.epsilon}")
        for row in table.rows:
            lines.append(f"  s(t) = {SPoly(coeffs=row.s).display()}")
            if row.empty:
                lines.append(f"    {EMPTY_ROW}")
            else:
                lines.append(f"    h(t) = {render_series_terms(row.series)}")
                lines.extend(f"    {render_resolution(pair)}" for pair in row.resolutions)
            if row.note:
                lines.append(f"    note: {row.note}")
    return "\n".join(lines) + "\n"


def render_point(point: PointModel) -> str:
    return f"({point.x}, {point.y})"


def render_divisor(d: FormalDivisor) -> str:
    if not d.terms:
        return "0"
    pieces = []
    for x, y, m in d.terms:
        sign = "-" if m < 0 else "+"
        magnitude = "" if abs(m) == 1 else f"{abs(m)}"
        pieces.append(f"{sign} {magnitude}({x}, {y})")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def render_partition_rows(rows: List[PartitionRow]) -> str:
    lines = [f"{'m':>3} {'sum':>8} {'2^(m-1)':>8}  verdict"]
    for row in rows:
        verdict = "PASS" if row.ok else "FAIL"
        lines.append(f"{row.m:>3} {row.total:>8} {row.expected:>8}  {verdict}")
    return "\n".join(lines)
