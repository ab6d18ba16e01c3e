"""
The Sonnenschein matrix of h(z) = sin^2(pi z / 2) and its sec^2 column sums.

Every z^j coefficient of [h(z)]^n and of 1/(1 - h(z)) = sec^2(pi z / 2) is a
rational multiple of pi^j, so both are computed exactly as pi-graded values.
"""

from __future__ import annotations

import math
from fractions import Fraction

from summability.exact import PiGradedValue, bernoulli, binomial
from summability.series import PI_GRADED, TruncatedSeries

ZERO = PiGradedValue(0, 0)


def sin2_series(order: int) -> TruncatedSeries:
    """
    Taylor coefficients of sin^2(pi z / 2) = (1 - cos(pi z)) / 2 up to z^order.

    The z^(2m) coefficient (m >= 1) is (-1)^(m+1) pi^(2m) / (2 (2m)!); the
    constant term and all odd coefficients vanish.
    """
    coeffs = [ZERO] * (order + 1)
    for power in range(2, order + 1, 2):
        m = power // 2
        coeffs[power] = PiGradedValue(
            Fraction((-1) ** (m + 1), 2 * math.factorial(power)), power
        )
    return TruncatedSeries.from_coeffs(coeffs, order, PI_GRADED)


def sin2_constant_term(n: int) -> PiGradedValue:
    """
    z^0 entry of row n from the power-reduction identity:

        C(2n, n)/4^n + sum_{r=0}^{n-1} (-1)^(n+r) C(2n, r) / 2^(2n-1)

    This is sin^(2n)(0), so it is 0 for every n >= 1 and 1 for n = 0.
    """
    if n < 0:
        raise ValueError(f"Row index must be >= 0, got {n}")
    if n == 0:
        return PiGradedValue(1, 0)
    q = binomial(2 * n, n) / 4**n
    for r in range(n):
        q += Fraction((-1) ** (n + r)) * binomial(2 * n, r) / 2 ** (2 * n - 1)
    return PiGradedValue(q, 0)


def sin2_entry_closed_form(n: int, k: int) -> PiGradedValue:
    """
    Closed-form z^(2k) coefficient of sin^(2n)(pi z / 2), n >= 1, k >= 1:

        pi^(2k) sum_{r=0}^{n-1} (-1)^(n+r+k) (n-r)^(2k) C(2n, r) / (2^(2n-1) (2k)!)

    Args:
        n: Row index (>= 1)
        k: Half the z-power (>= 1); the entry sits in column 2k

    Returns:
        Entry as a pi-graded value of grade 2k

    Raises:
        ValueError: If n < 1 or k < 1
    """
    if n < 1 or k < 1:
        raise ValueError(f"Closed form needs n >= 1 and k >= 1, got ({n}, {k})")
    denom = 2 ** (2 * n - 1) * math.factorial(2 * k)
    q = Fraction(0)
    for r in range(n):
        q += (-1) ** (n + r + k) * (n - r) ** (2 * k) * binomial(2 * n, r)
    return PiGradedValue(q / denom, 2 * k)


def sin2_entry(n: int, power: int) -> PiGradedValue:
    """
    Entry a_{n, power} of the sin^2 matrix for any row and z-power.

    Row 0 is the identity row, odd powers vanish, power 0 uses
    sin2_constant_term and even powers use sin2_entry_closed_form.
    """
    if n < 0 or power < 0:
        raise ValueError(f"Entry indices must be >= 0, got ({n}, {power})")
    if n == 0:
        return PiGradedValue(1 if power == 0 else 0, 0)
    if power % 2:
        return ZERO
    if power == 0:
        return sin2_constant_term(n)
    return sin2_entry_closed_form(n, power // 2)


def sec2_column_sums(count: int) -> list[PiGradedValue]:
    """
    Even-column sums of the sin^2 matrix, the z^(2n) coefficients of sec^2(pi z / 2):

        (-1)^n (8n + 4) (2^(2n+2) - 1) B_(2n+2) pi^(2n) / (2n + 2)!

    for n = 0 .. count-1. Odd columns sum to 0 (see sec2_column_sum_vector).

    Raises:
        ValueError: If count < 1
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    sums = []
    for n in range(count):
        q = (
            (-1) ** n
            * (8 * n + 4)
            * (2 ** (2 * n + 2) - 1)
            * bernoulli(2 * n + 2)
            / math.factorial(2 * n + 2)
        )
        sums.append(PiGradedValue(q, 2 * n))
    return sums


def sec2_column_sum_vector(num_cols: int) -> list[PiGradedValue]:
    """Column sums for z-powers 0 .. num_cols-1, with zeros in the odd columns."""
    if num_cols < 1:
        raise ValueError(f"num_cols must be >= 1, got {num_cols}")
    even = sec2_column_sums((num_cols + 1) // 2)
    return [even[j // 2] if j % 2 == 0 else ZERO for j in range(num_cols)]
