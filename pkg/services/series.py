import logging
from fractions import Fraction

from models.algebra import AlgebraParams, GeneralForm, IntSeries, LaurentPoly, Multiplicity
from models.betti import BettiPair
from services.errors import TruncationError

logger = logging.getLogger(__name__)

ONE_MINUS_T = LaurentPoly.from_terms({0: 1, 1: -1})


def ambient_hilbert_series(params: AlgebraParams, n_terms: int) -> IntSeries:
    """First ``n_terms`` coefficients of h_A(t)."""
    if n_terms < 1:
        raise TruncationError(f"n_terms must be positive, got {n_terms}")
    return IntSeries.inverse_of(params.ambient_denominator(), n_terms)


def char_poly(betti: BettiPair) -> LaurentPoly:
    """q(t) = sum_i (a_i - b_i) t^i."""
    return LaurentPoly.from_terms(betti.q_terms())


def p_poly(q: LaurentPoly) -> LaurentPoly:
    """p(t) = q(t) / (1 - t); raises NotDivisible when q(1) != 0."""
    return q.divide_one_minus_t()


def hilbert_series_of(params: AlgebraParams, q: LaurentPoly, n_terms: int) -> IntSeries:
    """h_A(t) q(t), known for ``n_terms`` coefficients from the lowest exponent of q."""
    if q.is_zero:
        return IntSeries(offset=n_terms, coeffs=(), trunc_order=n_terms)
    return ambient_hilbert_series(params, n_terms).mul_poly(q)


def series_from_resolution(params: AlgebraParams, betti: BettiPair, n_terms: int) -> IntSeries:
    return hilbert_series_of(params, char_poly(betti), n_terms)


def gk_and_multiplicity(params: AlgebraParams, q: LaurentPoly) -> Multiplicity:
    """GK-dimension as pole order at t = 1 and the exact multiplicity.

    With q = (1 - t)^k u and u(1) != 0, the pole order of h_A q is 3 - k and
    epsilon = u(1); for GK-dimension two that is -q'(1).
    """
    k = q.root_multiplicity_at_one()
    unit = q
    for _ in range(k):
        unit = unit.divide_one_minus_t()
    epsilon = unit.at_one()
    gkdim = max(3 - k, 0)
    logger.debug("pole order %d for %s", gkdim, q.display())
    return Multiplicity(gkdim=gkdim, e=Fraction(epsilon, params.iota_a), epsilon=epsilon)


def general_form(q: LaurentPoly) -> GeneralForm:
    """Split q as r + a(1 - t) - s(t)(1 - t)^2 with r = q(1) and a = -q'(1)."""
    r = q.at_one()
    a = -q.derivative_at_one()
    rest = LaurentPoly.monomial(r) + ONE_MINUS_T * a - q
    s = rest.divide_one_minus_t().divide_one_minus_t()
    return GeneralForm(r=r, a=a, s=s)
