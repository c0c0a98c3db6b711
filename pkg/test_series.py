from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from models.algebra import AlgebraKind, AlgebraParams, IntSeries, LaurentPoly
from models.betti import BettiPair
from services.errors import NotDivisible, TruncationError
from services.series import (
    ambient_hilbert_series,
    char_poly,
    general_form,
    gk_and_multiplicity,
    hilbert_series_of,
    p_poly,
    series_from_resolution,
)

QUADRATIC = AlgebraParams.for_kind("quadratic")
CUBIC = AlgebraParams.for_kind("cubic")

EXAMPLE_BETTI = BettiPair(a={1: 1, 2: 1, 7: 1}, b={3: 1, 7: 1, 8: 1})

polys = st.builds(
    LaurentPoly.from_terms,
    st.dictionaries(st.integers(-4, 8), st.integers(-5, 5), max_size=6),
)
counts = st.dictionaries(st.integers(-2, 6), st.integers(1, 4), min_size=1, max_size=4)
betti_pairs = st.builds(lambda a, b: BettiPair(a=a, b=b), counts, counts)
kinds = st.sampled_from([QUADRATIC, CUBIC])


class TestAlgebraParams:
    def test_constants(self):
        assert (QUADRATIC.r_a, QUADRATIC.iota_a, QUADRATIC.central_degree) == (3, 1, 3)
        assert (CUBIC.r_a, CUBIC.iota_a, CUBIC.central_degree) == (2, 2, 4)

    def test_rejects_mixed_constants(self):
        with pytest.raises(ValidationError):
            AlgebraParams(kind=AlgebraKind.CUBIC, r_a=3, iota_a=1, central_degree=3)


class TestLaurentPoly:
    def test_canonical_form_strips_both_ends(self):
        poly = LaurentPoly(offset=-1, coeffs=(0, 0, 1, 0, -2, 0))
        assert poly.offset == 1
        assert poly.coeffs == (1, 0, -2)

    def test_zero_polynomial(self):
        assert LaurentPoly(offset=5, coeffs=(0, 0)) == LaurentPoly()
        assert LaurentPoly().display() == "0"

    def test_display(self):
        assert LaurentPoly.from_terms({1: 1, 2: 1, 3: -1, 8: -1}).display() == "t + t^2 - t^3 - t^8"

    @given(poly=polys)
    def test_times_one_minus_t_then_divide(self, poly):
        assert p_poly(poly.times_one_minus_t()) == poly

    def test_divide_requires_root_at_one(self):
        with pytest.raises(NotDivisible):
            p_poly(LaurentPoly.from_terms({0: 1, 1: 1}))


class TestIntSeries:
    def test_reading_past_truncation_raises(self):
        series = ambient_hilbert_series(QUADRATIC, 4)
        assert series.coefficient(3) == 10
        with pytest.raises(TruncationError):
            series.coefficient(4)

    def test_dense_storage_is_enforced(self):
        with pytest.raises(ValidationError):
            IntSeries(offset=0, coeffs=(1, 2), trunc_order=5)

    def test_product_is_known_up_to_the_shorter_horizon(self):
        left = IntSeries.from_coefficients([1, 1, 1, 1])
        right = IntSeries.from_coefficients([1, 2], offset=1)
        product = left * right
        assert product.trunc_order == 3
        assert product.head(2, start=1) == [1, 3]


class TestAmbientSeries:
    @pytest.mark.parametrize(
        "params, n_terms, expected",
        [
            (QUADRATIC, 6, [1, 3, 6, 10, 15, 21]),
            (CUBIC, 6, [1, 2, 4, 6, 9, 12]),
            (QUADRATIC, 1, [1]),
        ],
    )
    def test_ambient_hilbert_series(self, params, n_terms, expected):
        series = ambient_hilbert_series(params, n_terms)
        assert series.trunc_order == n_terms
        assert series.head(n_terms) == expected

    def test_needs_a_positive_length(self):
        with pytest.raises(TruncationError):
            ambient_hilbert_series(QUADRATIC, 0)


class TestCharacteristicPolynomial:
    @pytest.mark.parametrize(
        "betti, terms",
        [
            (EXAMPLE_BETTI, {1: 1, 2: 1, 3: -1, 8: -1}),
            (BettiPair(a={0: 1}, b={1: 1}), {0: 1, 1: -1}),
            (BettiPair(a={0: 2}, b={2: 2}), {0: 2, 2: -2}),
        ],
    )
    def test_char_poly(self, betti, terms):
        assert char_poly(betti).terms() == terms

    @pytest.mark.parametrize(
        "q_terms, p_terms",
        [
            ({1: 1, 2: 1, 3: -1, 8: -1}, {1: 1, 2: 2, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1}),
            ({0: 1, 1: -1}, {0: 1}),
            ({0: 2, 2: -2}, {0: 2, 1: 2}),
        ],
    )
    def test_p_poly(self, q_terms, p_terms):
        assert p_poly(LaurentPoly.from_terms(q_terms)).terms() == p_terms


class TestSeriesFromResolution:
    @pytest.mark.parametrize(
        "params, betti, n_terms, expected",
        [
            (QUADRATIC, BettiPair(a={0: 1}, b={3: 1}), 5, [1, 3, 6, 9, 12]),
            (CUBIC, BettiPair(a={0: 1}, b={1: 1}), 6, [1, 1, 2, 2, 3, 3]),
            (QUADRATIC, BettiPair(a={0: 2}, b={1: 2}), 6, [2, 4, 6, 8, 10, 12]),
        ],
    )
    def test_appendix_rows(self, params, betti, n_terms, expected):
        assert series_from_resolution(params, betti, n_terms).head(n_terms) == expected

    def test_shifted_data_starts_at_its_lowest_degree(self):
        series = series_from_resolution(QUADRATIC, EXAMPLE_BETTI, 6)
        assert series.offset == 1
        assert series.trunc_order == 7
        assert series.head(3) == [1, 4, 8]

    @settings(max_examples=200)
    @given(params=kinds, betti=betti_pairs, n_terms=st.integers(1, 20))
    def test_equals_ambient_convolved_with_q(self, params, betti, n_terms):
        q = char_poly(betti)
        series = series_from_resolution(params, betti, n_terms)
        if q.is_zero:
            assert series.is_zero
            return
        ambient = ambient_hilbert_series(params, n_terms + q.degree - q.low_degree)
        for exponent in range(q.low_degree, q.low_degree + n_terms):
            expected = sum(
                c * ambient.coefficient(exponent - e)
                for e, c in q.terms().items()
                if exponent - e >= 0
            )
            assert series.coefficient(exponent) == expected


class TestMultiplicity:
    def test_example_module(self):
        q = LaurentPoly.from_terms({1: 1, 2: 1, 3: -1, 8: -1})
        result = gk_and_multiplicity(QUADRATIC, q)
        assert (result.gkdim, result.e, result.epsilon) == (2, Fraction(8), 8)

    def test_cubic_line(self):
        result = gk_and_multiplicity(CUBIC, LaurentPoly.from_terms({0: 1, 4: -1}))
        assert (result.gkdim, result.e, result.epsilon) == (2, Fraction(2), 4)

    @pytest.mark.parametrize("params, e", [(QUADRATIC, Fraction(1)), (CUBIC, Fraction(1, 2))])
    def test_free_module_has_full_dimension(self, params, e):
        result = gk_and_multiplicity(params, LaurentPoly.monomial(1))
        assert result.gkdim == 3
        assert result.e == e

    def test_point_module_has_dimension_one(self):
        # 0 -> A(-2) -> A(-1)^2 -> A -> P, so q = (1 - t)^2
        q = LaurentPoly.from_terms({0: 1, 1: -2, 2: 1})
        result = gk_and_multiplicity(QUADRATIC, q)
        assert (result.gkdim, result.epsilon) == (1, 1)

    @settings(max_examples=200)
    @given(params=kinds, poly=polys)
    def test_gk_two_epsilon_is_minus_derivative(self, params, poly):
        if poly.is_zero or poly.at_one() == 0:
            return
        q = poly.times_one_minus_t()
        result = gk_and_multiplicity(params, q)
        assert result.gkdim == 2
        assert result.epsilon == -q.derivative_at_one()
        assert result.e == Fraction(result.epsilon, params.iota_a)


class TestGeneralForm:
    def test_decomposes_a_class_polynomial(self):
        one_minus_t = LaurentPoly.from_terms({0: 1, 1: -1})
        s = LaurentPoly.from_terms({0: 3, 1: 2, 2: 1})
        q = one_minus_t * 4 - s * one_minus_t * one_minus_t
        form = general_form(q)
        assert (form.r, form.a, form.s) == (0, 4, s)

    @given(poly=polys)
    def test_identity_holds(self, poly):
        one_minus_t = LaurentPoly.from_terms({0: 1, 1: -1})
        form = general_form(poly)
        rebuilt = LaurentPoly.monomial(form.r) + one_minus_t * form.a - form.s * one_minus_t * one_minus_t
        assert rebuilt == poly

    def test_series_of_zero_polynomial_is_zero(self):
        assert hilbert_series_of(QUADRATIC, LaurentPoly(), 5).is_zero
