"""
Sonnenschein matrices built from a generating function f(z).

Row n of the matrix holds the coefficients of [f(z)]^n. Column sums are read
off as the coefficients of 1/(1 - f(z)) and can be checked numerically
against partial column sums over a finite number of rows.

Exact fields keep one tuple of coefficients per row. Float matrices are a
complex128 numpy array of shape (N, K+1).
"""

from __future__ import annotations

import dataclasses
import logging
import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from summability.series import FLOAT, CoefficientField, TruncatedSeries, geom_inverse, series_mul

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class SummabilityMatrix:
    """
    N x (K+1) block of a Sonnenschein matrix, entry(n, k) = f_{n,k}.

    The source dict describes the generator (kind and parameters) and is
    carried into output metadata.
    """

    rows: Any
    field: CoefficientField
    source: dict[str, Any] = dataclasses.field(default_factory=dict)

    @property
    def is_numeric(self) -> bool:
        return self.field.tag == FLOAT.tag

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.rows[0]) if len(self.rows) else 0

    def entry(self, n: int, k: int) -> Any:
        return self.rows[n][k]

    def column(self, k: int) -> list[Any]:
        return [row[k] for row in self.rows]

    def as_array(self) -> np.ndarray:
        """Entries as a complex128 array; exact entries are rounded."""
        if self.is_numeric:
            return np.asarray(self.rows, dtype=np.complex128)
        return np.array(
            [[complex(v) for v in row] for row in self.rows], dtype=np.complex128
        ).reshape(self.num_rows, self.num_cols)

    def is_lower_triangular(self) -> bool:
        """True if entry(n, k) = 0 whenever k < n."""
        return all(
            not self.rows[n][k]
            for n in range(self.num_rows)
            for k in range(min(n, self.num_cols))
        )


def _build_numeric_rows(f: TruncatedSeries, num_rows: int) -> np.ndarray:
    coeffs = f.as_array()
    rows = np.zeros((num_rows, f.order + 1), dtype=np.complex128)
    rows[0, 0] = 1
    # overflow to inf/nan is reported by verify_column_sums
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, num_rows):
            if not rows[n - 1].any():
                break
            rows[n] = np.convolve(rows[n - 1], coeffs)[: f.order + 1]
            if n % 500 == 0:
                logger.debug("Built %d/%d rows (order %d, float)", n, num_rows, f.order)
    return rows


def build_matrix(
    f: TruncatedSeries,
    num_rows: int,
    source: dict[str, Any] | None = None,
) -> SummabilityMatrix:
    """
    Build the first num_rows rows of the Sonnenschein matrix of f.

    Rows are computed incrementally, row_n = row_{n-1} * f, exactly in the
    field of f; float series produce a numpy array instead. Once a row
    vanishes every later row does too.

    Args:
        f: Generating function truncated at order K
        num_rows: Number of rows N (>= 1)
        source: Optional description of f for output metadata

    Returns:
        SummabilityMatrix with N rows and K + 1 columns

    Raises:
        ValueError: If num_rows < 1
    """
    if num_rows < 1:
        raise ValueError(f"num_rows must be >= 1, got {num_rows}")

    if f.field.tag == FLOAT.tag:
        rows: Any = _build_numeric_rows(f, num_rows)
    else:
        current = TruncatedSeries.one(f.order, f.field)
        exact_rows = [current.coeffs]
        for n in range(1, num_rows):
            if not current.is_zero():
                current = series_mul(current, f)
            exact_rows.append(current.coeffs)
            if n % 500 == 0:
                logger.debug("Built %d/%d rows (order %d, %s)", n, num_rows, f.order, f.field.tag)
        rows = tuple(exact_rows)

    logger.debug("Built %dx%d %s matrix", num_rows, f.order + 1, f.field.tag)
    return SummabilityMatrix(rows=rows, field=f.field, source=dict(source or {}))


def column_sums_via_series(f: TruncatedSeries) -> list[Any]:
    """
    Column sums of the Sonnenschein matrix of f as coefficients of 1/(1 - f).

    These are formal values; they equal the limits of the column partial
    sums when |f(0)| < 1 (see origin_in_unit_disc) and the partial sums
    actually converge (see verify_column_sums).

    Raises:
        NotInvertibleError: If f(0) = 1
    """
    return list(geom_inverse(f).coeffs)


def origin_in_unit_disc(f: TruncatedSeries) -> bool:
    """Numeric check of |f(0)| < 1, the condition behind the geometric-series argument."""
    return abs(complex(f.coeffs[0])) < 1


@dataclass(frozen=True)
class ColumnCheck:
    """Comparison of one column's partial sum against its predicted sum."""

    column: int
    predicted: complex
    partial_sum: complex
    deviation: float
    converged: bool


@dataclass(frozen=True)
class VerificationReport:
    """Per-column partial-sum checks for one matrix."""

    columns: tuple[ColumnCheck, ...]
    num_rows: int
    order: int
    tolerance: float

    @property
    def all_converged(self) -> bool:
        return all(c.converged for c in self.columns)

    @property
    def failed_columns(self) -> list[int]:
        return [c.column for c in self.columns if not c.converged]


def _to_complex(value: Any) -> complex:
    try:
        return complex(value)
    except OverflowError:
        return complex(math.inf, 0)


def _partial_sums(matrix: SummabilityMatrix) -> np.ndarray:
    if matrix.is_numeric:
        return np.asarray(matrix.rows).sum(axis=0)
    sums = []
    for k in range(matrix.num_cols):
        partial = matrix.field.zero
        for row in matrix.rows:
            partial = partial + row[k]
        sums.append(_to_complex(partial))
    return np.array(sums, dtype=np.complex128)


def verify_column_sums(
    matrix: SummabilityMatrix,
    predicted: Sequence[Any],
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """
    Compare column partial sums over the matrix rows with predicted column sums.

    Partial sums are accumulated in the matrix's own field (exact for exact
    matrices, double precision for float matrices) and the deviation
    |partial - predicted| is measured in double precision. Non-convergence,
    including overflow to inf/nan, is reported, never raised.

    Args:
        matrix: Matrix whose first N rows are summed
        predicted: Predicted sum for each column (at least num_cols values)
        tolerance: Absolute tolerance for the converged flag

    Returns:
        VerificationReport with one ColumnCheck per matrix column

    Raises:
        ValueError: If tolerance <= 0 or predicted is too short
    """
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    if len(predicted) < matrix.num_cols:
        raise ValueError(
            f"{len(predicted)} predicted sums for a matrix with {matrix.num_cols} columns"
        )

    predicted_c = np.array(
        [_to_complex(p) for p in predicted[: matrix.num_cols]], dtype=np.complex128
    )
    with np.errstate(over="ignore", invalid="ignore"):
        partials = _partial_sums(matrix)
        deviations = np.abs(partials - predicted_c)

    checks = [
        ColumnCheck(
            column=k,
            predicted=complex(predicted_c[k]),
            partial_sum=complex(partials[k]),
            deviation=float(deviations[k]),
            # nan compares False, so overflowed columns never count as converged
            converged=bool(deviations[k] <= tolerance),
        )
        for k in range(matrix.num_cols)
    ]

    report = VerificationReport(
        columns=tuple(checks),
        num_rows=matrix.num_rows,
        order=matrix.num_cols - 1,
        tolerance=tolerance,
    )
    logger.debug(
        "Verified %d columns over %d rows: %d failed",
        matrix.num_cols,
        matrix.num_rows,
        len(report.failed_columns),
    )
    return report


def transform_sequence(matrix: SummabilityMatrix, s: Sequence[complex]) -> list[complex]:
    """
    Apply the matrix to a sequence: t_n = sum_{k=0}^{K} entry(n, k) * s_k.

    The transform is truncated at column K and computed in double precision
    as a numpy matrix-vector product.

    Raises:
        ValueError: If s has fewer than num_cols entries
    """
    if len(s) < matrix.num_cols:
        raise ValueError(f"Sequence needs at least {matrix.num_cols} terms, got {len(s)}")
    terms = np.asarray(s[: matrix.num_cols], dtype=np.complex128)
    return (matrix.as_array() @ terms).tolist()
