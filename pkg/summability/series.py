"""
Truncated formal power series over an exact coefficient field.

A series stores c_0..c_K, the coefficients of z^0..z^K. Products, powers and
the geometric inverse 1/(1 - f) are exact up to degree K; higher degrees are
discarded, never rounded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from summability.errors import NotInvertibleError, SeriesError
from summability.exact import ComplexRational, PiGradedValue

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientField:
    """
    Coefficient field contract used by every series operation.

    Elements support +, -, *, / and == through their own operators; the field
    supplies zero, one and a coercion for raw inputs. The tag doubles as the
    representation tag written to output documents.
    """

    tag: str
    zero: Any
    one: Any
    coerce: Callable[[Any], Any]


RATIONAL = CoefficientField("exact-rational", Fraction(0), Fraction(1), Fraction)
COMPLEX_RATIONAL = CoefficientField(
    "exact-complex-rational",
    ComplexRational.zero(),
    ComplexRational.one(),
    ComplexRational.coerce,
)
PI_GRADED = CoefficientField(
    "pi-graded", PiGradedValue(0, 0), PiGradedValue(1, 0), PiGradedValue.coerce
)
# Double precision; only used for numeric checks, never for exact results.
FLOAT = CoefficientField("float", 0j, 1 + 0j, complex)

FIELDS: dict[str, CoefficientField] = {
    f.tag: f for f in (RATIONAL, COMPLEX_RATIONAL, PI_GRADED, FLOAT)
}


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_K of a formal power series, truncated at order K."""

    coeffs: tuple[Any, ...]
    order: int
    field: CoefficientField = RATIONAL

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError(f"Truncation order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(
                f"Series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(
        cls,
        values: Sequence[Any],
        order: int,
        field: CoefficientField = RATIONAL,
    ) -> TruncatedSeries:
        """
        Build a series from leading coefficients, padding with zeros up to order.

        Args:
            values: Coefficients of z^0, z^1, ... (at least one)
            order: Truncation order K
            field: Coefficient field (default: exact rationals)

        Returns:
            Series with exactly K + 1 coefficients

        Raises:
            SeriesError: If values is empty, K < 0 or len(values) > K + 1
        """
        if not values:
            raise SeriesError("At least one coefficient is required")
        if order < 0:
            raise SeriesError(f"Truncation order must be >= 0, got {order}")
        if len(values) > order + 1:
            raise SeriesError(
                f"{len(values)} coefficients do not fit in a series of order {order}"
            )
        coeffs = [field.coerce(v) for v in values]
        coeffs.extend([field.zero] * (order + 1 - len(coeffs)))
        return cls(tuple(coeffs), order, field)

    @classmethod
    def one(cls, order: int, field: CoefficientField = RATIONAL) -> TruncatedSeries:
        """The constant series 1."""
        return cls.from_coeffs([field.one], order, field)

    @classmethod
    def variable(cls, order: int, field: CoefficientField = RATIONAL) -> TruncatedSeries:
        """The series z (truncated to the constant 0 when order is 0)."""
        values = [field.zero, field.one] if order >= 1 else [field.zero]
        return cls.from_coeffs(values, order, field)

    def __getitem__(self, j: int) -> Any:
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop every coefficient above z^order (order must not exceed K)."""
        if order < 0 or order > self.order:
            raise SeriesError(f"Cannot truncate order {self.order} series to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order, self.field)

    def as_array(self) -> np.ndarray:
        """Coefficients as a complex128 array (approximate for exact fields)."""
        return np.array([complex(c) for c in self.coeffs], dtype=np.complex128)

    def to_numeric(self) -> TruncatedSeries:
        """Same series with every coefficient converted to a complex double."""
        return TruncatedSeries(tuple(self.as_array().tolist()), self.order, FLOAT)

    def _check_compatible(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise SeriesError(f"Order mismatch: {self.order} vs {other.order}")
        if self.field.tag != other.field.tag:
            raise SeriesError(f"Field mismatch: {self.field.tag} vs {other.field.tag}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order, self.field
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order, self.field)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __pow__(self, n: int) -> TruncatedSeries:
        return series_pow(self, n)

    def __str__(self) -> str:
        terms = [f"({c})*z^{j}" for j, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Truncated Cauchy product: c_j = sum_{i=0}^{j} a_i * b_{j-i} for j <= K.

    Float series go through numpy.convolve; exact fields multiply term by term.

    Raises:
        SeriesError: If the orders or fields differ
    """
    a._check_compatible(b)
    order = a.order
    if a.field.tag == FLOAT.tag:
        product = np.convolve(a.as_array(), b.as_array())[: order + 1]
        return TruncatedSeries(tuple(product.tolist()), order, FLOAT)

    out = [a.field.zero] * (order + 1)
    b_terms = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, a_i in enumerate(a.coeffs):
        if not a_i:
            continue
        for j, b_j in b_terms:
            if i + j > order:
                break
            out[i + j] = out[i + j] + a_i * b_j
    return TruncatedSeries(tuple(out), order, a.field)


def series_pow(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """
    Exact truncated n-th power; the z^k coefficient of f^n is the
    Sonnenschein entry f_{n,k}. f^0 is the constant series 1.

    Raises:
        ValueError: If n is negative
    """
    if n < 0:
        raise ValueError(f"Power must be >= 0, got {n}")
    result = TruncatedSeries.one(f.order, f.field)
    base = f
    while n:
        if n & 1:
            result = series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def geom_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """
    Geometric inverse g = 1/(1 - f), exact up to degree K.

    Uses g_0 = 1/(1 - f_0) and g_j = (sum_{i=1}^{j} f_i g_{j-i}) / (1 - f_0)
    rather than summing powers of f.

    Args:
        f: Series with f_0 != 1

    Returns:
        Series g with (1 - f) * g = 1 up to degree K

    Raises:
        NotInvertibleError: If f_0 = 1
    """
    field = f.field
    denom = field.one - f.coeffs[0]
    if not denom:
        raise NotInvertibleError("1 - f(z) is not invertible: constant term of f is 1")

    g = [field.one / denom]
    f_terms = [(i, c) for i, c in enumerate(f.coeffs) if i > 0 and c]
    for j in range(1, f.order + 1):
        acc = field.zero
        for i, f_i in f_terms:
            if i > j:
                break
            acc = acc + f_i * g[j - i]
        g.append(acc / denom)
    return TruncatedSeries(tuple(g), f.order, field)


def eval_numeric(f: TruncatedSeries, z: complex) -> complex:
    """
    Evaluate the truncated polynomial at z by Horner's rule in double precision.

    The result is approximate; exact work stays in the coefficient field.
    """
    return complex(P.polyval(z, f.as_array()))
