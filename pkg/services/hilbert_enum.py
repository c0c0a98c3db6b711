import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from pydantic import ValidationError

from models.algebra import AlgebraParams, IntSeries, LaurentPoly
from models.betti import BettiPair
from models.hilbert import (
    AppendixReport,
    Classification,
    EpsilonTable,
    HilbertClass,
    SPoly,
    TableRow,
)
from models.responses import PartitionRow
from services.betti_conditions import check_cm, check_critical
from services.errors import InsufficientTruncation, InvalidEpsilon, InvalidSPoly, NotInImage
from services.series import (
    ONE_MINUS_T,
    char_poly,
    general_form,
    gk_and_multiplicity,
    hilbert_series_of,
)

logger = logging.getLogger(__name__)

QUADRATIC = AlgebraParams.for_kind("quadratic")
TABLE_TERMS = 6
MIN_KNOWN_TERMS = 8
TYPO_NOTES = {(4, (3, 2, 1)): "reference table prints s(t) as 3 + 2t + 1"}

T = TypeVar("T")
R = TypeVar("R")


def _ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int) -> List[R]:
    """Map in input order, on a process pool when ``workers > 1``; ``fn`` must be picklable."""
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


def _require_epsilon(epsilon: int) -> None:
    if epsilon < 1:
        raise InvalidEpsilon(f"epsilon must be a positive integer, got {epsilon}")


def _require_admissible(params: AlgebraParams, epsilon: int, s: SPoly, critical: bool) -> None:
    _require_epsilon(epsilon)
    if not s.is_admissible(epsilon, params, critical):
        mode = "critical" if critical else "Cohen-Macaulay"
        raise InvalidSPoly(
            f"s(t) = {s.display()} is not {mode}-admissible for epsilon = {epsilon} ({params.kind.value})"
        )


def class_char_poly(hc: HilbertClass) -> LaurentPoly:
    """q(t) = epsilon (1 - t) - s(t) (1 - t)^2."""
    _require_admissible(hc.params, hc.epsilon, hc.s, hc.critical)
    return ONE_MINUS_T * hc.epsilon - hc.s.as_poly() * ONE_MINUS_T * ONE_MINUS_T


def s_to_hilbert(hc: HilbertClass, n_terms: int) -> IntSeries:
    """h(t) = h_A(t) q(t) for the class polynomial q."""
    return hilbert_series_of(hc.params, class_char_poly(hc), n_terms)


def partial_fraction_series(hc: HilbertClass, n_terms: int) -> IntSeries:
    """The same series written as e/(1-t)^2 - s/(1-t), or 2e/((1-t)(1-t^2)) - s/(1-t^2) when cubic."""
    _require_admissible(hc.params, hc.epsilon, hc.s, hc.critical)
    one_minus_t2 = LaurentPoly.from_terms({0: 1, 2: -1})
    if hc.params.is_cubic:
        first, second = ONE_MINUS_T * one_minus_t2, one_minus_t2
    else:
        first, second = ONE_MINUS_T * ONE_MINUS_T, ONE_MINUS_T
    # iota_A * e is epsilon for both kinds
    leading = IntSeries.inverse_of(first, n_terms) * hc.epsilon
    correction = IntSeries.inverse_of(second, n_terms).mul_poly(hc.s.as_poly())
    return leading - correction


def _admissible_prefix(p: Sequence[int], critical: bool) -> bool:
    """p_0 >= 1 and p_l >= 0, with every p_l >= 1 when critical."""
    floor = 1 if critical else 0
    return p[0] >= 1 and all(x >= floor for x in p[1:])


def hilbert_to_s(params: AlgebraParams, h: IntSeries, critical: bool = False) -> HilbertClass:
    """Recover (epsilon, s) from the known coefficients of a Hilbert series."""
    if h.trunc_order < MIN_KNOWN_TERMS:
        raise InsufficientTruncation(
            f"need at least {MIN_KNOWN_TERMS} known coefficients, got {h.trunc_order}"
        )
    if h.is_zero or h.offset != 0:
        raise NotInImage("a normalized Hilbert series starts with a nonzero constant term")
    window = h.mul_poly(params.ambient_denominator()).head(h.trunc_order, start=0)
    p = list(itertools.accumulate(window))
    if p[-1] != 0:
        # p(t) has not closed; an admissible prefix still extends to some class
        if not _admissible_prefix(p, critical):
            raise NotInImage(f"p(t) starts {p}, which no admissible s(t) produces")
        raise InsufficientTruncation(
            "h_A(t)^-1 h(t) has not terminated within the known coefficients"
        )

    epsilon = sum(p)
    coeffs = [epsilon - running for running in itertools.accumulate(p)]
    logger.debug("recovered epsilon = %d, s = %s", epsilon, coeffs)
    if epsilon < 1 or any(c < 0 for c in coeffs):
        raise NotInImage(f"no admissible s(t) reproduces the series (epsilon = {epsilon})")
    s = SPoly(coeffs=coeffs)
    if not s.is_admissible(epsilon, params, critical):
        raise NotInImage(f"s(t) = {s.display()} is not admissible for epsilon = {epsilon}")
    return HilbertClass(params=params, epsilon=epsilon, s=s, critical=critical)


def hilbert_class_of(params: AlgebraParams, betti: BettiPair) -> Classification:
    """Translate Betti data to start in degree zero and read off (epsilon, s)."""
    if betti.is_empty:
        raise NotInImage("empty Betti data has no Hilbert class")
    shift = min(betti.a_map())
    q = char_poly(betti.shifted(-shift))
    if q.is_zero:
        raise NotInImage("characteristic polynomial vanishes")
    multiplicity = gk_and_multiplicity(params, q)
    if multiplicity.gkdim != 2:
        raise NotInImage(f"GK-dimension is {multiplicity.gkdim}, not 2")
    s_poly = general_form(q).s
    if not s_poly.is_zero and s_poly.low_degree < 0:
        raise NotInImage(f"s(t) = {s_poly.display()} has negative exponents")
    try:
        s = SPoly(coeffs=[s_poly.coefficient(i) for i in range(s_poly.degree + 1)])
    except ValidationError:
        raise NotInImage(f"s(t) = {s_poly.display()} has negative coefficients")
    if not s.is_cm_admissible(multiplicity.epsilon):
        raise NotInImage(f"s(t) = {s.display()} is not admissible for epsilon = {multiplicity.epsilon}")
    return Classification(
        shift=shift,
        hilbert_class=HilbertClass(params=params, epsilon=multiplicity.epsilon, s=s, critical=False),
    )


def enumerate_s(
    params: AlgebraParams, epsilon: int, critical: bool, max_degree: Optional[int] = None
) -> List[SPoly]:
    """Admissible s(t), descending lexicographic in (s_0, s_1, ...)."""
    _require_epsilon(epsilon)
    if critical:
        found = [
            SPoly(coeffs=sorted(subset, reverse=True))
            for size in range(epsilon)
            for subset in itertools.combinations(range(1, epsilon), size)
        ]
        if max_degree is not None:
            found = [s for s in found if s.degree <= max_degree]
        found = [s for s in found if s.is_critical_admissible(epsilon, params)]
    else:
        if max_degree is None:
            raise ValueError("Cohen-Macaulay s(t) form an infinite family; pass max_degree")
        found = [
            SPoly(coeffs=chain)
            for chain in itertools.combinations_with_replacement(range(epsilon - 1, -1, -1), max_degree + 1)
        ]
    found.sort(key=lambda s: s.coeffs, reverse=True)
    logger.debug("enumerated %d s(t) for epsilon = %d", len(found), epsilon)
    return found


def count_hilbert_closed(params: AlgebraParams, epsilon: int) -> int:
    _require_epsilon(epsilon)
    if params.is_cubic and epsilon > 1:
        return 2 ** (epsilon - 1) - 1
    return 2 ** (epsilon - 1)


def count_hilbert_recursive(params: AlgebraParams, epsilon: int) -> int:
    """Doubling recurrence; cubic algebras add one per step once epsilon > 2 (|S_1| = |S_2| = 1)."""
    _require_epsilon(epsilon)
    if not params.is_cubic:
        return 2 * count_hilbert_recursive(params, epsilon - 1) if epsilon > 1 else 1
    if epsilon <= 2:
        return 1
    return 2 * count_hilbert_recursive(params, epsilon - 1) + 1


def count_hilbert_cm_bounded(epsilon: int, max_degree: int) -> int:
    """Weakly decreasing s(t) with s_0 < epsilon and deg s <= max_degree."""
    _require_epsilon(epsilon)
    return math.comb(epsilon - 1 + max_degree + 1, max_degree + 1)


def _jumps(epsilon: int, s: SPoly) -> List[int]:
    """p_l = (epsilon, s_0, ..., s_d, 0) successive differences, the coefficients of p(t)."""
    chain = (epsilon,) + s.coeffs + (0,)
    return [x - y for x, y in zip(chain, chain[1:])]


def _interior_ranges(p: Sequence[int], critical: bool) -> List[range]:
    # q_l = p_l - p_(l-1), so a_l runs over [max(q_l, 0), p_l] and one less on top when critical
    top = 0 if critical else 1
    return [range(max(p[l] - p[l - 1], 0), p[l] + top) for l in range(1, len(p))]


def _build_pair(
    params: AlgebraParams, p: Tuple[int, ...], critical: bool, interior: Tuple[int, ...]
) -> BettiPair:
    check = check_critical if critical else check_cm
    nu = len(p)
    a = {0: p[0]}
    b = {nu: p[-1]}
    for l, a_l in enumerate(interior, start=1):
        a[l] = a_l
        b[l] = a_l - (p[l] - p[l - 1])
    pair = BettiPair(a=a, b=b)
    assert check(params, pair), f"enumerated pair {pair} fails its own check"
    return pair


def enumerate_betti(
    params: AlgebraParams, epsilon: int, s: SPoly, critical: bool, workers: int = 1
) -> List[BettiPair]:
    """All normalized Betti data of the class, ordered by interior (a_1, ..., a_(nu-1))."""
    _require_admissible(params, epsilon, s, critical)
    p = _jumps(epsilon, s)
    candidates = list(itertools.product(*_interior_ranges(p, critical)))
    logger.debug(
        "checking %d candidates for epsilon = %d, s = %s on %d worker(s)",
        len(candidates), epsilon, s.display(), workers,
    )
    return _ordered_map(partial(_build_pair, params, tuple(p), critical), candidates, workers)


def count_betti_closed(params: AlgebraParams, epsilon: int, s: SPoly, critical: bool) -> int:
    """Product over interior indices of min(p_(l-1), p_l), plus one per factor when not critical."""
    _require_admissible(params, epsilon, s, critical)
    p = _jumps(epsilon, s)
    extra = 0 if critical else 1
    return math.prod(min(p[l - 1], p[l]) + extra for l in range(1, len(p)))


def two_jump_predicate(epsilon: int, s: SPoly) -> bool:
    """Two consecutive downward jumps of length >= 2 in epsilon, s_0, s_1, ..., 0."""
    _require_admissible(QUADRATIC, epsilon, s, True)
    jumps = _jumps(epsilon, s)
    found = any(x >= 2 and y >= 2 for x, y in zip(jumps, jumps[1:]))
    assert found == (count_betti_closed(QUADRATIC, epsilon, s, True) > 1), (epsilon, s)
    return found


def line_module_family(epsilon: int, n: int) -> BettiPair:
    """Betti data of S^(epsilon-1) + S(-n), S a line module with 0 -> A(-1) -> A -> S -> 0."""
    if epsilon < 2 or n < 0:
        raise ValueError("line module family needs epsilon >= 2 and n >= 0")
    a = {0: epsilon - 1}
    b = {1: epsilon - 1}
    a[n] = a.get(n, 0) + 1
    b[n + 1] = b.get(n + 1, 0) + 1
    return BettiPair(a=a, b=b)


def partition_count_distinct_bounded(n: int, m: int) -> int:
    """Partitions of n into distinct parts taken from 1..m-1."""
    if n < 0:
        return 0
    return distinct_partition_counts(m, n)[n]


def distinct_partition_counts(m: int, n_max: Optional[int] = None) -> List[int]:
    """counts[n] for 0 <= n <= n_max (default (m-1)m/2), each part 1..m-1 used at most once."""
    if n_max is None:
        n_max = m * (m - 1) // 2
    counts = [1] + [0] * n_max
    for part in range(1, m):
        for total in range(n_max, part - 1, -1):
            counts[total] += counts[total - part]
    return counts


def appendix_tables(params: AlgebraParams, eps_max: int, workers: int = 1) -> AppendixReport:
    """Hilbert series and critical resolutions for every epsilon <= eps_max."""
    _require_epsilon(eps_max)
    tables: List[EpsilonTable] = []
    for epsilon in range(1, eps_max + 1):
        rows: List[TableRow] = []
        # rows cover every s admissible for some kind, ascending
        for s in reversed(enumerate_s(QUADRATIC, epsilon, critical=True)):
            note = TYPO_NOTES.get((epsilon, s.coeffs))
            if not s.is_critical_admissible(epsilon, params):
                rows.append(TableRow(s=s.coeffs, series=[], resolutions=[], empty=True, note=note))
                continue
            hc = HilbertClass(params=params, epsilon=epsilon, s=s, critical=True)
            rows.append(
                TableRow(
                    s=s.coeffs,
                    series=s_to_hilbert(hc, TABLE_TERMS).head(TABLE_TERMS, start=0),
                    resolutions=enumerate_betti(params, epsilon, s, True, workers=workers),
                    note=note,
                )
            )
        tables.append(EpsilonTable(kind=params.kind, epsilon=epsilon, rows=rows))
    return AppendixReport(kind=params.kind, eps_max=eps_max, tables=tables)


def partition_identity(m_max: int) -> List[PartitionRow]:
    """Sum over n of the bounded distinct-part counts against 2^(m-1), for m = 1..m_max."""
    rows = []
    for m in range(1, m_max + 1):
        total = sum(distinct_partition_counts(m))
        expected = 2 ** (m - 1)
        rows.append(PartitionRow(m=m, total=total, expected=expected, ok=total == expected))
    return rows
