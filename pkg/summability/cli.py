"""
Command-line interface for Sonnenschein summability matrices.

Subcommands:
  matrix     emit the N x (K+1) matrix of a generator
  colsums    column sums from the closed forms and/or 1/(1 - f)
  bernoulli  Bernoulli numbers from the double sum and/or the recurrence
  verify     compare column partial sums against the predicted sums

Exit codes: 0 success/converged, 1 verification failed, 2 usage or domain error.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from summability.config import OUTPUT_FORMATS, Config
from summability.errors import DomainError
from summability.exact import ComplexRational, bernoulli, bernoulli_recurrence, parse_complex
from summability.export import encode_value, write_document, write_document_to_path
from summability.karamata import (
    KaramataParams,
    karamata_column_sums,
    karamata_entry,
    karamata_series,
)
from summability.matrix import (
    build_matrix,
    column_sums_via_series,
    origin_in_unit_disc,
    verify_column_sums,
)
from summability.schema import KINDS, OutputDocument
from summability.series import COMPLEX_RATIONAL, RATIONAL, TruncatedSeries
from summability.sine_squared import sec2_column_sum_vector, sin2_entry, sin2_series

logger = logging.getLogger(__name__)

# Posix exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SYNTAX = 2

GENERATOR_KINDS = ("karamata", "sin2", "custom")
LOG_LEVELS = ("debug", "info", "warning", "error", "critical", "none")
# "double-sum" names the same formula as "paper"
BERNOULLI_METHOD_ALIASES = {"double-sum": "paper"}


@dataclass
class Generator:
    """A generating function f truncated at the requested order."""
    kind: str
    series: TruncatedSeries
    params: Optional[KaramataParams] = None

    def describe(self) -> dict[str, Any]:
        if self.params is not None:
            return self.params.describe()
        if self.kind == "custom":
            return {"kind": "custom", "coeffs": [str(c) for c in self.series.coeffs]}
        return {"kind": self.kind}


def parse_coeffs(text: str) -> list[Any]:
    """
    Parse a comma-separated coefficient list such as "0,1/2,1/4+1/4i".

    Returns Fractions when every coefficient is real, ComplexRationals otherwise.
    """
    values = [parse_complex(part) for part in text.split(",") if part.strip()]
    if not values:
        raise DomainError("--coeffs needs at least one coefficient")
    if all(v.is_real for v in values):
        return [v.re for v in values]
    return values


def build_generator(args: argparse.Namespace, order: int) -> Generator:
    """
    Build the generating function selected on the command line.

    Args:
        args: Parsed arguments (kind, alpha, beta, coeffs)
        order: Truncation order K

    Returns:
        Generator with an exact series of order K

    Raises:
        DomainError: If required parameters are missing or invalid
    """
    if args.kind == "karamata":
        if args.alpha is None or args.beta is None:
            raise DomainError("karamata requires --alpha and --beta")
        params = KaramataParams.parse(args.alpha, args.beta)
        return Generator("karamata", karamata_series(params, order), params)

    if args.kind == "sin2":
        return Generator("sin2", sin2_series(order))

    if args.coeffs is None:
        raise DomainError("custom requires --coeffs")
    values = parse_coeffs(args.coeffs)
    if len(values) > order + 1:
        logger.warning("Truncating %d coefficients to order %d", len(values), order)
        values = values[: order + 1]
    field = COMPLEX_RATIONAL if any(isinstance(v, ComplexRational) for v in values) else RATIONAL
    return Generator("custom", TruncatedSeries.from_coeffs(values, order, field))


def _resolve_cols(args: argparse.Namespace, config: Config) -> int:
    cols = args.cols if args.cols is not None else config.defaults.cols
    if cols < 1:
        raise DomainError(f"--cols must be >= 1, got {cols}")
    return cols


def _resolve_rows(rows: Optional[int], default: int) -> int:
    value = rows if rows is not None else default
    if value < 1:
        raise DomainError(f"--rows must be >= 1, got {value}")
    return value


def _regime(series: TruncatedSeries) -> str:
    return "analytic" if origin_in_unit_disc(series) else "formal"


def cmd_matrix(args: argparse.Namespace, config: Config) -> OutputDocument:
    """
    Emit the Sonnenschein matrix of the selected generator.

    Without --rows only the first display_rows rows are produced. With
    --closed-form the karamata and sin2 entries come from their closed forms
    instead of powers of f.
    """
    rows = _resolve_rows(args.rows, config.defaults.display_rows)
    cols = _resolve_cols(args, config)
    generator = build_generator(args, cols - 1)

    if args.closed_form:
        if generator.params is not None:
            p = generator.params
            entries: Sequence[Sequence[Any]] = [
                [karamata_entry(p, n, k) for k in range(cols)] for n in range(rows)
            ]
        elif generator.kind == "sin2":
            entries = [[sin2_entry(n, k) for k in range(cols)] for n in range(rows)]
        else:
            raise DomainError("--closed-form is only available for karamata and sin2")
    else:
        entries = build_matrix(generator.series, rows, source=generator.describe()).rows

    metadata = {
        "generator": generator.describe(),
        "rows": rows,
        "cols": cols,
        "method": "closed-form" if args.closed_form else "series",
        "exactness": "float" if args.float else generator.series.field.tag,
    }
    payload = [[encode_value(v, args.float) for v in row] for row in entries]
    return OutputDocument(kind=KINDS.MATRIX, metadata=metadata, payload=payload)


def closed_column_sums(generator: Generator, cols: int) -> list[Any]:
    """Closed-form column sums: Karamata formula or the sec^2 Bernoulli series."""
    if generator.params is not None:
        return karamata_column_sums(generator.params, cols)
    if generator.kind == "sin2":
        return sec2_column_sum_vector(cols)
    raise DomainError("No closed-form column sums for custom generators; use --method series")


def cmd_colsums(args: argparse.Namespace, config: Config) -> OutputDocument:
    """
    Emit column sums from the closed form, from 1/(1 - f), or both with a
    per-column equality flag.
    """
    cols = _resolve_cols(args, config)
    generator = build_generator(args, cols - 1)
    method = args.method or ("series" if generator.kind == "custom" else "both")
    if method not in ("closed", "series", "both"):
        raise DomainError(f"Unknown column-sum method: {method}")

    closed = closed_column_sums(generator, cols) if method in ("closed", "both") else None
    series = column_sums_via_series(generator.series) if method in ("series", "both") else None

    records = []
    for k in range(cols):
        record: dict[str, Any] = {"column": k}
        if closed is not None:
            record["closed"] = encode_value(closed[k], args.float)
        if series is not None:
            record["series"] = encode_value(series[k], args.float)
        if closed is not None and series is not None:
            record["equal"] = closed[k] == series[k]
        records.append(record)

    metadata: dict[str, Any] = {
        "generator": generator.describe(),
        "cols": cols,
        "method": method,
        "regime": _regime(generator.series),
        "exactness": "float" if args.float else generator.series.field.tag,
    }
    if method == "both":
        metadata["all_equal"] = all(r["equal"] for r in records)
    return OutputDocument(kind=KINDS.COLUMN_SUMS, metadata=metadata, payload=records)


def cmd_bernoulli(args: argparse.Namespace) -> OutputDocument:
    """Emit B_0..B_n_max from the double sum, the recurrence, or both."""
    if args.n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {args.n_max}")
    method = BERNOULLI_METHOD_ALIASES.get(args.method, args.method) or "paper"

    records = []
    for n in range(args.n_max + 1):
        record: dict[str, Any] = {"n": n}
        double_sum = bernoulli(n) if method in ("paper", "both") else None
        recurrence = bernoulli_recurrence(n) if method in ("recurrence", "both") else None
        if double_sum is not None:
            record["double_sum"] = encode_value(double_sum, args.float)
        if recurrence is not None:
            record["recurrence"] = encode_value(recurrence, args.float)
        if double_sum is not None and recurrence is not None:
            record["agree"] = double_sum == recurrence
        records.append(record)

    metadata: dict[str, Any] = {
        "n_max": args.n_max,
        "method": method,
        "convention": "B_1 = -1/2",
        "exactness": "float" if args.float else "exact-rational",
    }
    if method == "both":
        metadata["all_agree"] = all(r["agree"] for r in records)
    return OutputDocument(kind=KINDS.BERNOULLI, metadata=metadata, payload=records)


def cmd_verify(args: argparse.Namespace, config: Config) -> tuple[OutputDocument, int]:
    """
    Sum the first N rows of each column and compare with the predicted sums.

    Generators with f(0) = 0 have only finitely many nonzero rows in the
    truncated window, so their partial sums are accumulated exactly; all
    others are summed in double precision.

    Returns:
        The verification document and the exit code (0 iff every column converged)
    """
    rows = _resolve_rows(args.rows, config.defaults.rows)
    cols = _resolve_cols(args, config)
    tolerance = args.tol if args.tol is not None else config.defaults.tolerance
    if not tolerance > 0:
        raise DomainError(f"--tol must be positive, got {tolerance}")
    generator = build_generator(args, cols - 1)

    if generator.kind == "custom":
        predicted = column_sums_via_series(generator.series)
    else:
        predicted = closed_column_sums(generator, cols)

    exact = not generator.series.coeffs[0]
    f = generator.series if exact else generator.series.to_numeric()
    matrix = build_matrix(f, rows, source=generator.describe())
    report = verify_column_sums(matrix, predicted, tolerance)

    records = [
        {
            "column": check.column,
            "predicted": encode_value(predicted[check.column], args.float),
            "partial_sum": encode_value(check.partial_sum),
            "deviation": encode_value(check.deviation),
            "converged": check.converged,
        }
        for check in report.columns
    ]
    metadata = {
        "generator": generator.describe(),
        "rows": rows,
        "cols": cols,
        "tolerance": repr(tolerance),
        "regime": _regime(generator.series),
        "summation": "exact" if exact else "float",
        "all_converged": report.all_converged,
        "failed_columns": report.failed_columns,
    }
    if not report.all_converged:
        print(
            f"Column sums did not converge for {len(report.failed_columns)} column(s) "
            f"after {rows} rows",
            file=sys.stderr,
        )
    document = OutputDocument(kind=KINDS.VERIFICATION, metadata=metadata, payload=records)
    return document, EXIT_OK if report.all_converged else EXIT_ERROR


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=None,
        help="Output format (default: json, or SUMMABILITY_FORMAT)",
    )
    parser.add_argument(
        "--float",
        action="store_true",
        help="Emit decimal doubles instead of exact values",
    )
    parser.add_argument(
        "--output",
        type=str,
        default=None,
        help="Write the document to this file instead of stdout",
    )
    parser.add_argument(
        "--log",
        choices=LOG_LEVELS,
        default="warning",
        help="Set minimum logging level (default: warning)",
    )


def _add_generator_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=GENERATOR_KINDS, help="Generating function f(z)")
    parser.add_argument("--alpha", type=str, default=None, help='Karamata alpha, e.g. "1/2" or "1/4+1/4i"')
    parser.add_argument("--beta", type=str, default=None, help='Karamata beta, e.g. "1/3"')
    parser.add_argument(
        "--coeffs",
        type=str,
        default=None,
        help='Custom f(z) coefficients of z^0, z^1, ..., e.g. "0,1"',
    )
    parser.add_argument(
        "--cols",
        type=int,
        default=None,
        help="Number of columns K+1 (default: 64)",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all four subcommands."""
    parser = argparse.ArgumentParser(
        prog="summability",
        description="Sonnenschein summability matrices, column sums and Bernoulli numbers",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    matrix = subparsers.add_parser("matrix", help="Emit a Sonnenschein matrix")
    _add_generator_options(matrix)
    matrix.add_argument("--rows", type=int, default=None, help="Number of rows N (default: 32)")
    matrix.add_argument(
        "--closed-form",
        action="store_true",
        help="Use closed-form entries (karamata, sin2) instead of powers of f",
    )
    _add_output_options(matrix)

    colsums = subparsers.add_parser("colsums", help="Emit column sums")
    _add_generator_options(colsums)
    colsums.add_argument(
        "--method",
        choices=("closed", "series", "both"),
        default=None,
        help="closed form, coefficients of 1/(1-f), or both (default: both; series for custom)",
    )
    _add_output_options(colsums)

    bern = subparsers.add_parser("bernoulli", help="Emit Bernoulli numbers B_0..B_n")
    bern.add_argument("n_max", type=int, help="Largest index n")
    bern.add_argument(
        "--method",
        choices=("paper", "double-sum", "recurrence", "both"),
        default=None,
        help="paper (alias double-sum) for the double-sum formula, recurrence, or both "
        "with agreement flags (default: paper)",
    )
    _add_output_options(bern)

    verify = subparsers.add_parser("verify", help="Check column partial sums against predictions")
    _add_generator_options(verify)
    verify.add_argument("--rows", type=int, default=None, help="Number of rows N (default: 2000)")
    verify.add_argument("--tol", type=float, default=None, help="Absolute tolerance (default: 1e-9)")
    _add_output_options(verify)

    return parser


def configure_logging(level: str) -> None:
    """
    Send package diagnostics to stderr at the requested level.

    Only the summability logger is adjusted; "none" silences the package
    without touching logging for anything else in the process.
    """
    package_logger = logging.getLogger("summability")
    if level == "none":
        package_logger.setLevel(logging.CRITICAL + 1)
        return
    package_logger.setLevel(getattr(logging, level.upper()))
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entrypoint; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log)

    try:
        config = Config.load()
    except ValueError as e:
        print(f"Invalid configuration: {e}", file=sys.stderr)
        return EXIT_SYNTAX

    try:
        exit_code = EXIT_OK
        if args.command == "matrix":
            document = cmd_matrix(args, config)
        elif args.command == "colsums":
            document = cmd_colsums(args, config)
        elif args.command == "bernoulli":
            document = cmd_bernoulli(args)
        else:
            document, exit_code = cmd_verify(args, config)
    except (ValueError, ZeroDivisionError) as e:
        print(f"Failed to run {args.command}: {e}", file=sys.stderr)
        return EXIT_SYNTAX

    fmt = args.format or config.output.format
    if args.output:
        write_document_to_path(document, fmt, Path(args.output), indent=config.output.indent)
        print(f"Wrote {document.kind} document to {args.output}", file=sys.stderr)
    else:
        write_document(document, fmt, sys.stdout, indent=config.output.indent)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
