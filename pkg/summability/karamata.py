"""
Karamata matrices K[alpha, beta] and their Euler-mean special case.

The Karamata matrix is the Sonnenschein matrix of

    f(z) = (alpha + (1 - alpha - beta) z) / (1 - beta z)

for complex alpha, beta. beta = 0 gives the Euler means.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from summability.errors import DomainError, PoleError
from summability.exact import ComplexRational, binomial, parse_complex
from summability.series import COMPLEX_RATIONAL, TruncatedSeries


@dataclass(frozen=True)
class KaramataParams:
    """
    Parameters alpha, beta of a Karamata matrix.

    beta = 1 is rejected. alpha = 1 is allowed here and only rejected by the
    column-sum formulas.
    """

    alpha: ComplexRational
    beta: ComplexRational

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", ComplexRational.coerce(self.alpha))
        object.__setattr__(self, "beta", ComplexRational.coerce(self.beta))
        if self.beta == 1:
            raise DomainError("beta = 1 makes f(z) = (alpha + (1 - alpha - beta) z)/(1 - beta z) undefined")

    @classmethod
    def parse(cls, alpha: str, beta: str) -> KaramataParams:
        """Build parameters from "re+im i" text."""
        return cls(parse_complex(alpha), parse_complex(beta))

    @property
    def in_analytic_regime(self) -> bool:
        """|alpha| < 1 and |beta| < 1, checked numerically."""
        return abs(self.alpha) < 1 and abs(self.beta) < 1

    def describe(self) -> dict[str, Any]:
        return {"kind": "karamata", "alpha": str(self.alpha), "beta": str(self.beta)}


def karamata_series(p: KaramataParams, order: int) -> TruncatedSeries:
    """
    Taylor coefficients of the Karamata generating function up to z^order.

    The numerator alpha + (1 - alpha - beta) z is expanded against the
    geometric series of 1/(1 - beta z), giving alpha at z^0 and
    (1 - alpha - beta) beta^(k-1) + alpha beta^k at z^k for k >= 1.

    Args:
        p: Karamata parameters
        order: Truncation order K (>= 0)

    Returns:
        Exact series over Q(i)
    """
    gamma = 1 - p.alpha - p.beta
    coeffs = [p.alpha]
    beta_power = ComplexRational.one()  # beta^(k-1)
    for _ in range(1, order + 1):
        coeffs.append(gamma * beta_power + p.alpha * beta_power * p.beta)
        beta_power = beta_power * p.beta
    return TruncatedSeries.from_coeffs(coeffs, order, COMPLEX_RATIONAL)


def karamata_entry(p: KaramataParams, n: int, k: int) -> ComplexRational:
    """
    Closed-form Karamata entry

        f_{n,k} = sum_{v=0}^{k} C(n, v) (1-alpha-beta)^v alpha^(n-v)
                  C(n+k-v-1, k-v) beta^(k-v)

    with the totalized binomial, so row 0 is the identity row through
    C(-1, 0) = 1.

    Raises:
        ValueError: If n or k is negative
    """
    if n < 0 or k < 0:
        raise ValueError(f"Entry indices must be >= 0, got ({n}, {k})")
    gamma = 1 - p.alpha - p.beta
    total = ComplexRational.zero()
    # C(n, v) vanishes for v > n
    for v in range(min(n, k) + 1):
        coeff = binomial(n, v) * binomial(n + k - v - 1, k - v)
        if not coeff:
            continue
        total = total + coeff * gamma**v * p.alpha ** (n - v) * p.beta ** (k - v)
    return total


def euler_entry(alpha: Any, n: int, k: int) -> ComplexRational:
    """Euler-mean entry C(n, k) alpha^(n-k) (1 - alpha)^k; zero for k > n."""
    a = ComplexRational.coerce(alpha)
    if k > n:
        return ComplexRational.zero()
    return binomial(n, k) * a ** (n - k) * (1 - a) ** k


def karamata_column_sums(p: KaramataParams, num_cols: int) -> list[ComplexRational]:
    """
    Column sums [1/(1-alpha), (1-beta)/(1-alpha), (1-beta)/(1-alpha), ...].

    These are the coefficients of 1/(1 - f); they are the limits of the column
    partial sums when |alpha| < 1.

    Args:
        p: Karamata parameters
        num_cols: Number of columns K + 1 (>= 1)

    Raises:
        PoleError: If alpha = 1
    """
    if num_cols < 1:
        raise ValueError(f"num_cols must be >= 1, got {num_cols}")
    if p.alpha == 1:
        raise PoleError("Karamata column sums have a pole at alpha = 1")
    first = 1 / (1 - p.alpha)
    rest = (1 - p.beta) / (1 - p.alpha)
    return [first] + [rest] * (num_cols - 1)


def karamata_geometric_inverse(p: KaramataParams, order: int) -> TruncatedSeries:
    """
    1/(1 - f) in partial fractions: 1/(1-alpha) + (1-beta)/(1-alpha) * sum_{k>=1} z^k.

    Raises:
        PoleError: If alpha = 1
    """
    return TruncatedSeries.from_coeffs(
        karamata_column_sums(p, order + 1), order, COMPLEX_RATIONAL
    )
