"""Brute-force generators used to cross-check the closed forms and the enumerators."""

import itertools
import logging
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from models.algebra import AlgebraParams
from models.betti import BettiPair, CheckForm, SweepReport
from services.betti_conditions import check_cm, check_critical
from services.errors import HilbertError
from services.hilbert_enum import hilbert_class_of

logger = logging.getLogger(__name__)


Vector = Tuple[int, ...]


@lru_cache(maxsize=None)
def _count_vectors(length: int, max_count: int) -> Dict[int, List[Vector]]:
    """Every count vector of the given length, grouped by its total."""
    by_total: Dict[int, List[Vector]] = defaultdict(list)
    for vector in itertools.product(range(max_count + 1), repeat=length):
        by_total[sum(vector)].append(vector)
    return by_total


def _weight(vector: Vector) -> int:
    return sum(i * c for i, c in enumerate(vector))


@lru_cache(maxsize=None)
def _by_total_and_weight(length: int, max_count: int) -> Dict[Tuple[int, int], List[Vector]]:
    grouped: Dict[Tuple[int, int], List[Vector]] = defaultdict(list)
    for total, vectors in _count_vectors(length, max_count).items():
        for vector in vectors:
            grouped[total, _weight(vector)].append(vector)
    return grouped


def betti_oracle(
    params: AlgebraParams, epsilon: int, critical: bool = True
) -> Dict[Vector, List[BettiPair]]:
    """Normalized Betti data with support in [0, epsilon] and counts <= epsilon, keyed by s(t).

    Only pairs with equal totals m = n <= epsilon are built: every accepted
    pair has S(b)_alpha - S(a)_alpha >= 1 on each row, so m <= epsilon. A pair
    of GK-dimension two has epsilon = sum_i i (b_i - a_i), so for each a only
    the b of weight weight(a) + epsilon are paired with it.
    """
    check = check_critical if critical else check_cm
    by_total = _count_vectors(epsilon + 1, epsilon)
    by_weight = _by_total_and_weight(epsilon + 1, epsilon)
    found: Dict[Vector, List[Tuple[Vector, BettiPair]]] = defaultdict(list)
    swept = 0
    for total in range(1, epsilon + 1):
        for a_counts in by_total[total]:
            if a_counts[0] == 0:
                continue
            for b_counts in by_weight.get((total, _weight(a_counts) + epsilon), ()):
                swept += 1
                pair = BettiPair.from_counts(a_counts, b_counts)
                if not check(params, pair):
                    continue
                try:
                    classified = hilbert_class_of(params, pair)
                except HilbertError:
                    continue
                if classified.hilbert_class.epsilon != epsilon:
                    continue
                found[classified.hilbert_class.s.coeffs].append((a_counts, pair))
    logger.debug("oracle swept %d pairs for epsilon = %d", swept, epsilon)
    # dense a-vectors share a_0 and a_nu within a class, so this is interior order
    return {s: [pair for _, pair in sorted(rows, key=lambda row: row[0])] for s, rows in found.items()}


def _pairs(max_degree: int, max_count: int) -> Iterator[BettiPair]:
    by_total = _count_vectors(max_degree + 1, max_count)
    for _, vectors in sorted(by_total.items()):
        for a_counts in vectors:
            for b_counts in vectors:
                yield BettiPair.from_counts(a_counts, b_counts)


def form_equivalence_sweep(params: AlgebraParams, max_degree: int = 4, max_count: int = 3) -> SweepReport:
    """Run every checker form over all pairs with support in [0, max_degree] and equal totals.

    Pairs with unequal totals fail the counting condition of every form and are
    not built.
    """
    report = SweepReport()
    forms = list(CheckForm)
    for pair in _pairs(max_degree, max_count):
        report.checked += 1
        cm = {check_cm(params, pair, form) for form in forms}
        critical = {check_critical(params, pair, form) for form in forms}
        if len(cm) > 1 or len(critical) > 1:
            report.disagreements.append(pair)
            continue
        is_cm, is_critical = cm.pop(), critical.pop()
        report.accepted_cm += is_cm
        report.accepted_critical += is_critical
        if is_critical and not is_cm:
            report.critical_not_cm.append(pair)
    logger.debug(
        "form sweep: %d pairs, %d CM, %d critical", report.checked, report.accepted_cm, report.accepted_critical
    )
    return report
