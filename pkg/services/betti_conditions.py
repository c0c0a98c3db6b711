import logging
from typing import Any, Dict, List, Mapping, Optional, Tuple

from models.algebra import AlgebraParams
from models.betti import (
    BettiPair,
    CheckForm,
    DegreeMatrix,
    Ladder,
    ShapeGrid,
    ShapeMode,
    StairSeq,
    Violation,
)
from services.errors import EmptySequence, ShapeUnavailable

logger = logging.getLogger(__name__)

QUADRATIC = AlgebraParams.for_kind("quadratic")


def stair_sequence(c: Any) -> StairSeq:
    """S(c): every degree i repeated c_i times, ascending."""
    items = c.items() if isinstance(c, Mapping) else c
    entries: List[int] = []
    for degree, count in sorted(items):
        if count < 0:
            raise ValueError(f"count at degree {degree} is negative")
        entries.extend([degree] * count)
    if not entries:
        raise EmptySequence("S(c) is undefined for the zero sequence")
    return StairSeq(entries=tuple(entries))


def degree_matrix(betti: BettiPair) -> DegreeMatrix:
    s_a = stair_sequence(betti.a)
    s_b = stair_sequence(betti.b)
    entries = tuple(
        tuple(s_b.at(beta) - s_a.at(alpha) for beta in range(1, len(s_b) + 1))
        for alpha in range(1, len(s_a) + 1)
    )
    matrix = DegreeMatrix(rows=len(s_a), cols=len(s_b), entries=entries)
    _assert_degree_matrix(matrix)
    return matrix


def _assert_degree_matrix(matrix: DegreeMatrix) -> None:
    for alpha in range(1, matrix.rows + 1):
        for beta in range(1, matrix.cols + 1):
            here = matrix.at(alpha, beta)
            if alpha < matrix.rows:
                assert matrix.at(alpha + 1, beta) <= here
            if beta < matrix.cols:
                assert here <= matrix.at(alpha, beta + 1)
            # rank-one differences against the first row and column
            assert here - matrix.at(alpha, 1) == matrix.at(1, beta) - matrix.at(1, 1)


def ladder_of(betti: BettiPair) -> Ladder:
    """L_{a,b}: the cells where S(a)_alpha < S(b)_beta."""
    matrix = degree_matrix(betti)
    member = tuple(tuple(entry > 0 for entry in row) for row in matrix.entries)
    return Ladder(m=matrix.rows, n=matrix.cols, member=member)


def twist_exponents(betti: BettiPair) -> List[int]:
    """Row twists S(a)_1, ..., S(a)_m applied to a presentation matrix."""
    return list(stair_sequence(betti.a).entries)


def _below(counts: Dict[int, int], l: int, inclusive: bool) -> int:
    return sum(c for d, c in counts.items() if d < l or (inclusive and d == l))


def _nonzero_violation(form: CheckForm, betti: BettiPair) -> Optional[Violation]:
    if betti.a and betti.b:
        return None
    return Violation(form=form, condition="(nonzero)", message="Betti data must be nonzero")


def _negative_count(betti: BettiPair) -> Optional[str]:
    for side, counts in (("a", betti.a), ("b", betti.b)):
        for degree, count in counts:
            if count < 0:
                return f"{side}_{degree} = {count} is negative"
    return None


def violation_q(params: AlgebraParams, betti: BettiPair, critical: bool) -> Optional[Violation]:
    """Conditions on q_i = a_i - b_i, with mu and nu the extreme nonzero q_i."""
    form = CheckForm.Q
    nonzero = _nonzero_violation(form, betti)
    if nonzero:
        return nonzero

    def fail(label: str, message: str) -> Violation:
        return Violation(form=form, condition=f"q({label})", message=message)

    q = betti.q_terms()
    a = betti.a_map()
    if not q:
        return fail("b", "q vanishes identically")
    mu, nu = min(q), max(q)
    for degree in sorted(a):
        if degree < mu or degree >= nu:
            return fail("a", f"a_{degree} = {a[degree]} lies outside mu = {mu} <= l < nu = {nu}")
    if a.get(mu, 0) != q[mu] or q[mu] <= 0:
        return fail("b", f"a_mu = {a.get(mu, 0)} must equal q_mu = {q[mu]} > 0")
    if sum(q.values()) != 0:
        return fail("c", f"sum of q_i is {sum(q.values())}, not 0")
    partial = 0
    for l in range(mu, nu + 1):
        q_l, a_l = q.get(l, 0), a.get(l, 0)
        partial += q_l
        if critical and not mu < l < nu:
            continue
        upper_ok = a_l < partial if critical else a_l <= partial
        if not (max(q_l, 0) <= a_l and upper_ok):
            bound = "<" if critical else "<="
            return fail(
                "d", f"need max(q_{l}, 0) <= a_{l} {bound} p_{l}, got a_{l} = {a_l}, p_{l} = {partial}"
            )
    if critical and params.is_cubic and a[mu] >= 2 and mu == nu - 1:
        return fail("e", f"cubic algebra with a_mu = {a[mu]} >= 2 and mu = nu - 1")
    return None


def violation_ab(params: AlgebraParams, betti: BettiPair, critical: bool) -> Optional[Violation]:
    """Partial-sum conditions, mu lowest nonzero a_i and nu highest nonzero b_i."""
    form = CheckForm.AB
    nonzero = _nonzero_violation(form, betti)
    if nonzero:
        return nonzero

    def fail(label: str, message: str) -> Violation:
        return Violation(form=form, condition=f"ab({label})", message=message)

    negative = _negative_count(betti)
    if negative:
        return fail("a", negative)
    a, b = betti.a_map(), betti.b_map()
    mu, nu = min(a), max(b)
    if any(d >= nu for d in a) or any(d <= mu for d in b):
        return fail("b", f"need a_l = 0 for l >= {nu} and b_l = 0 for l <= {mu}")
    if betti.m != betti.n:
        return fail("c", f"sum of a_i is {betti.m} but sum of b_i is {betti.n}")
    if critical:
        levels = range(mu + 1, nu)
    else:
        levels = range(min(min(a), min(b)), max(max(a), max(b)) + 1)
    for l in levels:
        lhs, rhs = _below(b, l, inclusive=True), _below(a, l, inclusive=False)
        if lhs > rhs or (critical and lhs == rhs):
            bound = "<" if critical else "<="
            return fail("d", f"need sum_(i <= {l}) b_i {bound} sum_(i < {l}) a_i, got {lhs} vs {rhs}")
    if critical and params.is_cubic and betti.n >= 2 and mu == nu - 1:
        return fail("e", f"cubic algebra with n = {betti.n} >= 2 and mu = nu - 1")
    return None


def violation_ladder(params: AlgebraParams, betti: BettiPair, critical: bool) -> Optional[Violation]:
    """Ladder conditions; cells (alpha, beta) with beta >= alpha (- 1 when critical) must lie in L_{a,b}."""
    form = CheckForm.LADDER
    nonzero = _nonzero_violation(form, betti)
    if nonzero:
        return nonzero
    part = "(2)" if critical else "(1)"

    def fail(label: str, message: str) -> Violation:
        return Violation(form=form, condition=f"{part}({label})", message=message)

    negative = _negative_count(betti)
    if negative:
        return fail("a", negative)
    if betti.m != betti.n:
        return fail("b", f"m = {betti.m} differs from n = {betti.n}")
    s_a = stair_sequence(betti.a)
    s_b = stair_sequence(betti.b)
    lag = 1 if critical else 0
    # rows of L_{a,b} are intervals ending at n, so the leftmost required cell decides each row
    for alpha in range(1, betti.m + 1):
        beta = max(alpha - lag, 1)
        if s_a.at(alpha) >= s_b.at(beta):
            return fail(
                "c",
                f"cell ({alpha}, {beta}) is outside the ladder: "
                f"S(a)_{alpha} = {s_a.at(alpha)} >= S(b)_{beta} = {s_b.at(beta)}",
            )
    if critical and params.is_cubic and cubic_exclusion_applies(betti):
        return fail("d", "cubic algebra with n >= 2 and every degree matrix entry equal to 1")
    return None


def cubic_exclusion_applies(betti: BettiPair) -> bool:
    """n >= 2 and S(b)_beta - S(a)_alpha = 1 for every cell."""
    return betti.n >= 2 and degree_matrix(betti).all_equal(1)


def cubic_exclusion_by_support(betti: BettiPair) -> bool:
    """n >= 2 and mu = nu - 1, mu the lowest a-degree and nu the highest b-degree."""
    return betti.n >= 2 and min(betti.a_map()) == max(betti.b_map()) - 1


_FORMS = {
    CheckForm.Q: violation_q,
    CheckForm.AB: violation_ab,
    CheckForm.LADDER: violation_ladder,
}


def violation_cm(
    params: AlgebraParams, betti: BettiPair, form: CheckForm = CheckForm.LADDER
) -> Optional[Violation]:
    return _FORMS[CheckForm(form)](params, betti, False)


def violation_critical(
    params: AlgebraParams, betti: BettiPair, form: CheckForm = CheckForm.LADDER
) -> Optional[Violation]:
    return _FORMS[CheckForm(form)](params, betti, True)


def check_cm(params: AlgebraParams, betti: BettiPair, form: CheckForm = CheckForm.LADDER) -> bool:
    return violation_cm(params, betti, form) is None


def check_critical(params: AlgebraParams, betti: BettiPair, form: CheckForm = CheckForm.LADDER) -> bool:
    return violation_critical(params, betti, form) is None


def generic_shape(
    betti: BettiPair, mode: ShapeMode, params: Optional[AlgebraParams] = None
) -> ShapeGrid:
    """Nonzero pattern of a generic presentation matrix with the given Betti numbers."""
    params = params or QUADRATIC
    mode = ShapeMode(mode)
    if mode == ShapeMode.CM:
        violation = violation_cm(params, betti)
    else:
        violation = violation_critical(params, betti)
    if violation:
        raise ShapeUnavailable(
            f"{mode.value} shape needs Betti data passing {violation.condition}: {violation.message}"
        )

    matrix = degree_matrix(betti)
    m, n = matrix.rows, matrix.cols
    if mode == ShapeMode.BORDERED:
        if m != n:
            raise ShapeUnavailable(f"bordered shape needs a square matrix, got {m} x {n}")

        def keep(alpha: int, beta: int) -> bool:
            return alpha == 1 or beta == alpha - 1 or beta == n

    else:

        def keep(alpha: int, beta: int) -> bool:
            return matrix.at(alpha, beta) > 0

    cells: List[Tuple[int, ...]] = []
    for alpha in range(1, m + 1):
        row = tuple(
            matrix.at(alpha, beta) if keep(alpha, beta) else 0 for beta in range(1, n + 1)
        )
        cells.append(row)
    grid = ShapeGrid(rows=m, cols=n, cells=tuple(cells))
    assert all(grid.entry(alpha, beta) >= 1 for alpha, beta in grid.nonzero_cells())
    return grid
