"""Tests for exact scalar arithmetic: rationals, Q(i), pi-graded values, binomials, Bernoulli numbers."""

from fractions import Fraction

import pytest

from conftest import random_complex
from summability.errors import DomainError, GradeMismatchError
from summability.exact import (
    ComplexRational,
    PiGradedValue,
    bernoulli,
    bernoulli_recurrence,
    binomial,
    format_rational,
    parse_complex,
    parse_pi_graded,
    parse_rational,
)


def test_rational_arithmetic_is_exact_and_canonical():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    half = Fraction(2, 4)
    assert (half.numerator, half.denominator) == (1, 2)
    assert Fraction(-1, 3) * 3 == -1


def test_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / 0


@pytest.mark.parametrize(
    "text,expected",
    [("-5/6", Fraction(-5, 6)), ("3", Fraction(3)), ("2/4", Fraction(1, 2)), ("−1/2", Fraction(-1, 2))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


def test_parse_rational_rejects_garbage_and_zero_denominator():
    with pytest.raises(DomainError):
        parse_rational("abc")
    with pytest.raises(DomainError):
        parse_rational("1/0")


def test_format_rational_puts_sign_on_numerator():
    assert format_rational(Fraction(5, -6)) == "-5/6"
    assert format_rational(Fraction(3, 1)) == "3"


@pytest.mark.parametrize(
    "m,j,expected",
    [(5, 2, 10), (-1, 0, 1), (3, 5, 0), (4, -1, 0), (-1, 3, -1), (-2, 2, 3), (0, 0, 1)],
)
def test_binomial_values(m, j, expected):
    assert binomial(m, j) == expected


def test_binomial_pascal_rule():
    for m in range(-5, 21):
        for j in range(1, 21):
            assert binomial(m, j) == binomial(m - 1, j - 1) + binomial(m - 1, j)


@pytest.mark.parametrize(
    "n,expected",
    [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (3, Fraction(0)), (4, Fraction(-1, 30))],
)
def test_bernoulli_double_sum(n, expected):
    assert bernoulli(n) == expected


@pytest.mark.parametrize("n,expected", [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6))])
def test_bernoulli_recurrence(n, expected):
    assert bernoulli_recurrence(n) == expected


def test_bernoulli_algorithms_agree():
    for n in range(31):
        assert bernoulli(n) == bernoulli_recurrence(n)


def test_odd_bernoulli_numbers_vanish():
    for n in range(3, 30, 2):
        assert bernoulli(n) == 0


def test_bernoulli_satisfies_binomial_recurrence():
    for m in range(1, 16):
        assert sum(binomial(m + 1, j) * bernoulli(j) for j in range(m + 1)) == 0


def test_bernoulli_rejects_negative_index():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_complex_rational_field_axioms(rng):
    for _ in range(200):
        a, b, c = random_complex(rng), random_complex(rng), random_complex(rng)
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_complex_rational_mixes_with_fractions():
    z = ComplexRational(Fraction(1, 2), Fraction(1, 4))
    assert 1 - z == ComplexRational(Fraction(1, 2), Fraction(-1, 4))
    assert Fraction(2) * z == ComplexRational(1, Fraction(1, 2))
    assert 1 / ComplexRational(0, 1) == ComplexRational(0, -1)
    assert ComplexRational(3, 0) == 3
    assert hash(ComplexRational(3, 0)) == hash(Fraction(3))


def test_complex_rational_power():
    i = ComplexRational(0, 1)
    assert i**2 == -1
    assert i**4 == 1
    assert i**-1 == ComplexRational(0, -1)
    assert ComplexRational.zero() ** 0 == 1


def test_complex_rational_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ComplexRational(1, 1) / 0


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1/2", ComplexRational(Fraction(1, 2), 0)),
        ("1/2+0i", ComplexRational(Fraction(1, 2), 0)),
        ("1/4+1/4i", ComplexRational(Fraction(1, 4), Fraction(1, 4))),
        ("-1/2-1/3i", ComplexRational(Fraction(-1, 2), Fraction(-1, 3))),
        ("2/5i", ComplexRational(0, Fraction(2, 5))),
        ("-i", ComplexRational(0, -1)),
        ("-1/3i", ComplexRational(0, Fraction(-1, 3))),
        ("1/2+1e-3i", ComplexRational(Fraction(1, 2), Fraction(1, 1000))),
        ("1e-3i", ComplexRational(0, Fraction(1, 1000))),
        ("2.5e-1-1/4i", ComplexRational(Fraction(1, 4), Fraction(-1, 4))),
        ("1E+2+2i", ComplexRational(100, 2)),
    ],
)
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


def test_complex_text_format():
    assert str(ComplexRational(Fraction(1, 2), 0)) == "1/2+0i"
    assert str(ComplexRational(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3i"
    z = ComplexRational(Fraction(-5, 6), Fraction(7, 3))
    assert parse_complex(str(z)) == z


def test_parse_complex_rejects_garbage():
    with pytest.raises(DomainError):
        parse_complex("1/2+xi")
    with pytest.raises(DomainError):
        parse_complex("")


def test_pi_graded_product_rule_and_commutativity():
    a = PiGradedValue(Fraction(1, 4), 2)
    b = PiGradedValue(Fraction(-1, 48), 4)
    assert a * b == PiGradedValue(Fraction(-1, 192), 6)
    assert a * b == b * a


def test_pi_graded_addition_requires_equal_grades():
    a = PiGradedValue(Fraction(1, 4), 2)
    assert a + PiGradedValue(Fraction(1, 4), 2) == PiGradedValue(Fraction(1, 2), 2)
    with pytest.raises(GradeMismatchError):
        a + PiGradedValue(1, 0)


def test_pi_graded_zero_is_identity_for_every_grade():
    zero = PiGradedValue(0, 0)
    a = PiGradedValue(Fraction(3, 7), 5)
    assert zero + a == a
    assert a - a == zero
    assert PiGradedValue(0, 9) == zero
    assert not zero


def test_pi_graded_division_and_negative_grade():
    a = PiGradedValue(Fraction(1, 4), 2)
    assert a / PiGradedValue(2, 0) == PiGradedValue(Fraction(1, 8), 2)
    with pytest.raises(GradeMismatchError):
        PiGradedValue(1, 0) / a
    with pytest.raises(ZeroDivisionError):
        a / PiGradedValue(0, 0)


def test_pi_graded_numeric_value():
    assert float(PiGradedValue(Fraction(1, 4), 2)) == pytest.approx(2.4674011002723395)
    assert complex(PiGradedValue(2, 0)) == 2


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1/4*pi^2", PiGradedValue(Fraction(1, 4), 2)),
        ("-1/48*pi^4", PiGradedValue(Fraction(-1, 48), 4)),
        ("1", PiGradedValue(1, 0)),
        ("3*pi", PiGradedValue(3, 1)),
    ],
)
def test_parse_pi_graded(text, expected):
    assert parse_pi_graded(text) == expected
    assert str(expected) == text
