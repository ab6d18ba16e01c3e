"""Tests for truncated formal power series arithmetic."""

from fractions import Fraction

import numpy as np
import pytest

from conftest import random_series
from summability.errors import NotInvertibleError, SeriesError
from summability.exact import PiGradedValue
from summability.karamata import KaramataParams, karamata_series
from summability.series import (
    FLOAT,
    PI_GRADED,
    RATIONAL,
    TruncatedSeries,
    eval_numeric,
    geom_inverse,
    series_mul,
    series_pow,
)


def series(values, order):
    return TruncatedSeries.from_coeffs([Fraction(v) for v in values], order)


def test_from_coeffs_pads_with_zeros():
    s = series([1], 3)
    assert s.coeffs == (1, 0, 0, 0)
    assert len(s) == 4
    assert series([0, 1], 2).coeffs == (0, 1, 0)


def test_from_coeffs_rejects_over_length_and_empty():
    with pytest.raises(SeriesError):
        series([1, 2, 3, 4], 2)
    with pytest.raises(SeriesError):
        TruncatedSeries.from_coeffs([], 2)
    with pytest.raises(SeriesError):
        TruncatedSeries.from_coeffs([1], -1)


def test_series_mul_examples():
    assert series_mul(series([1, 1], 2), series([1, -1], 2)).coeffs == (1, 0, -1)
    assert series_mul(series([0, 1], 3), series([0, 1], 3)).coeffs == (0, 0, 1, 0)


def test_series_mul_identity(rng):
    f = random_series(rng, 6)
    assert series_mul(f, TruncatedSeries.one(6)) == f


def test_series_mul_order_mismatch():
    with pytest.raises(SeriesError):
        series_mul(series([1], 2), series([1], 3))


def test_series_mul_field_mismatch():
    with pytest.raises(SeriesError):
        series_mul(series([1], 2), TruncatedSeries.one(2, PI_GRADED))


def test_series_pow_examples():
    z = TruncatedSeries.variable(6)
    assert series_pow(z, 5).coeffs == (0, 0, 0, 0, 0, 1, 0)
    assert series_pow(series([1, 1], 4), 2).coeffs == (1, 2, 1, 0, 0)
    assert series_pow(series([3, 1], 4), 0) == TruncatedSeries.one(4)


def test_series_pow_rejects_negative_power():
    with pytest.raises(ValueError):
        series_pow(series([1], 2), -1)


def test_series_pow_matches_repeated_mul(rng):
    for _ in range(100):
        f = random_series(rng, 5)
        assert series_pow(f, 2) == series_mul(f, f)
        assert f**3 == f * f * f


def test_series_mul_commutative_and_associative(rng):
    for _ in range(100):
        a, b, c = (random_series(rng, 6) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_series_pow_exponents_add(rng):
    for _ in range(100):
        f = random_series(rng, 5)
        a, b = rng.randint(0, 6), rng.randint(0, 6)
        assert series_pow(f, a + b) == series_mul(series_pow(f, a), series_pow(f, b))


def test_geom_inverse_examples():
    z = TruncatedSeries.variable(4)
    assert geom_inverse(z).coeffs == (1, 1, 1, 1, 1)
    assert geom_inverse(series([Fraction(1, 2)], 2)).coeffs == (2, 0, 0)


def test_geom_inverse_multiply_back(rng):
    for _ in range(100):
        f = random_series(rng, 8)
        g = geom_inverse(f)
        one_minus_f = TruncatedSeries.one(8) - f
        assert (one_minus_f * g).coeffs == (1,) + (0,) * 8


def test_geom_inverse_not_invertible():
    with pytest.raises(NotInvertibleError):
        geom_inverse(series([1, 1], 3))


def test_geom_inverse_pi_graded():
    # 1/(1 - (pi^2/4) z^2) = sum (pi^2/4)^m z^(2m)
    h = TruncatedSeries.from_coeffs(
        [0, 0, PiGradedValue(Fraction(1, 4), 2)], 6, PI_GRADED
    )
    g = geom_inverse(h)
    assert g[4] == PiGradedValue(Fraction(1, 16), 4)
    assert g[6] == PiGradedValue(Fraction(1, 64), 6)
    assert not g[3]


def test_truncation_consistency(rng):
    for _ in range(100):
        high = rng.randint(3, 8)
        low = rng.randint(0, high)
        a, b = random_series(rng, high), random_series(rng, high)
        a_low, b_low = a.truncate(low), b.truncate(low)
        n = rng.randint(0, 5)
        assert series_mul(a, b).truncate(low) == series_mul(a_low, b_low)
        assert series_pow(a, n).truncate(low) == series_pow(a_low, n)
        assert geom_inverse(a).truncate(low) == geom_inverse(a_low)


def test_truncate_rejects_higher_order():
    with pytest.raises(SeriesError):
        series([1], 2).truncate(3)


def test_eval_numeric_examples():
    assert eval_numeric(series([1, 1], 1), 1.0) == 2.0
    assert eval_numeric(series([0, 0, 1], 2), 2.0) == 4.0


def test_eval_numeric_karamata_at_one():
    f = karamata_series(KaramataParams.parse("1/2", "1/3"), 200)
    assert abs(eval_numeric(f, 1.0) - 1.0) < 1e-9


def test_to_numeric_converts_field():
    f = series([Fraction(1, 2), Fraction(1, 4)], 1).to_numeric()
    assert f.field == FLOAT
    assert f.coeffs == (0.5 + 0j, 0.25 + 0j)
    assert series_mul(f, f).coeffs == (0.25, 0.25)


def test_default_field_is_rational():
    assert series([1], 0).field == RATIONAL


def test_float_product_matches_exact_product(rng):
    for _ in range(20):
        a, b = random_series(rng, 8), random_series(rng, 8)
        numeric = series_mul(a.to_numeric(), b.to_numeric())
        assert numeric.field == FLOAT
        np.testing.assert_allclose(numeric.as_array(), series_mul(a, b).as_array(), rtol=1e-12, atol=1e-12)


def test_eval_numeric_at_complex_point():
    f = TruncatedSeries.from_coeffs([Fraction(1, 2), Fraction(-1, 3), Fraction(1, 4)], 2)
    z = 0.5 - 0.25j
    assert eval_numeric(f, z) == pytest.approx(0.5 - z / 3 + z * z / 4)
