"""Shared fixtures and helpers for the summability test suite."""

import random
from fractions import Fraction

import pytest

from summability.exact import ComplexRational
from summability.karamata import KaramataParams
from summability.series import RATIONAL, TruncatedSeries

# |alpha| < 1 and |beta| < 1 throughout
KARAMATA_GRID = [
    ("0", "0"),
    ("1/2", "1/3"),
    ("-1/2", "1/2"),
    ("1/3", "-1/4"),
    ("1/4+1/4i", "1/5"),
    ("1/2", "1/4i"),
    ("-1/3i", "1/2+1/4i"),
    ("1/5", "0"),
    ("1/2+1/4i", "1/3"),
]


def karamata_grid() -> list[KaramataParams]:
    return [KaramataParams.parse(a, b) for a, b in KARAMATA_GRID]


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 6))


def random_complex(rng: random.Random) -> ComplexRational:
    return ComplexRational(random_fraction(rng), random_fraction(rng))


def random_series(rng: random.Random, order: int, constant_not_one: bool = True) -> TruncatedSeries:
    coeffs = [random_fraction(rng) for _ in range(order + 1)]
    if constant_not_one and coeffs[0] == 1:
        coeffs[0] = Fraction(1, 2)
    return TruncatedSeries.from_coeffs(coeffs, order, RATIONAL)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
