"""
Serialization of output documents.

Numeric values travel as tagged strings ({"tag": ..., "value": ...}) so exact
rationals, Gaussian rationals and pi-graded values survive a JSON round trip
unchanged. CSV output uses the same value strings as JSON.
"""

import csv
import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

from summability.exact import (
    ComplexRational,
    PiGradedValue,
    format_rational,
    parse_complex,
    parse_pi_graded,
    parse_rational,
)
from summability.schema import KINDS, TAGS, OutputDocument, is_tagged_value


def format_float(value: complex) -> str:
    """Decimal text of a double ("0.5") or complex double ("0.5-1.25i")."""
    if value.imag == 0:
        return repr(value.real)
    return f"{value.real!r}{value.imag:+}i"


def parse_float(text: str) -> complex:
    """Inverse of format_float."""
    if text.endswith("i"):
        return complex(text[:-1] + "j")
    return complex(float(text))


def _to_complex(value: Any) -> complex:
    try:
        return complex(value)
    except OverflowError:
        return complex(math.inf, 0)


def encode_value(value: Any, as_float: bool = False) -> dict[str, str]:
    """
    Encode one numeric value as a tagged string.

    Args:
        value: Fraction, int, ComplexRational, PiGradedValue, float or complex
        as_float: If True, emit the double-precision value tagged "float"

    Returns:
        {"tag": <representation tag>, "value": <text>}
    """
    if as_float or isinstance(value, (float, complex)):
        return {"tag": TAGS.FLOAT, "value": format_float(_to_complex(value))}
    if isinstance(value, (int, Fraction)):
        return {"tag": TAGS.EXACT_RATIONAL, "value": format_rational(value)}
    if isinstance(value, ComplexRational):
        # real values decode to an equal Fraction
        if value.is_real:
            return {"tag": TAGS.EXACT_RATIONAL, "value": format_rational(value.re)}
        return {"tag": TAGS.EXACT_COMPLEX_RATIONAL, "value": str(value)}
    if isinstance(value, PiGradedValue):
        return {"tag": TAGS.PI_GRADED, "value": str(value)}
    raise TypeError(f"Cannot encode {type(value).__name__}")


def decode_value(tagged: dict[str, str]) -> Any:
    """
    Decode a tagged string back into its exact (or float) value.

    Raises:
        ValueError: If the tag is unknown or the text is malformed
    """
    tag, text = tagged["tag"], tagged["value"]
    if tag == TAGS.EXACT_RATIONAL:
        return parse_rational(text)
    if tag == TAGS.EXACT_COMPLEX_RATIONAL:
        return parse_complex(text)
    if tag == TAGS.PI_GRADED:
        return parse_pi_graded(text)
    if tag == TAGS.FLOAT:
        return parse_float(text)
    raise ValueError(f"Unknown representation tag: {tag}")


def _decode_tree(obj: Any) -> Any:
    if is_tagged_value(obj):
        return decode_value(obj)
    if isinstance(obj, dict):
        return {key: _decode_tree(value) for key, value in obj.items()}
    if isinstance(obj, list):
        return [_decode_tree(value) for value in obj]
    return obj


def document_to_json(document: OutputDocument, indent: int = 2) -> str:
    """Serialize a validated document to JSON text."""
    document.validate()
    return json.dumps(document.to_dict(), indent=indent, ensure_ascii=False)


def load_document(text: str, decode: bool = True) -> OutputDocument:
    """
    Parse JSON text produced by document_to_json.

    Args:
        text: JSON document
        decode: If True, replace tagged values by their decoded values

    Returns:
        OutputDocument whose payload holds exact values when decode is True
    """
    data = json.loads(text)
    document = OutputDocument(
        kind=data["kind"], metadata=data.get("metadata", {}), payload=data.get("payload", [])
    )
    document.validate()
    if decode:
        document.payload = _decode_tree(document.payload)
    return document


def _cell(value: Any) -> str:
    if is_tagged_value(value):
        return str(value["value"])
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_csv(document: OutputDocument, stream: TextIO) -> None:
    """
    Write the document payload as CSV.

    Matrices become one CSV row per matrix row; record lists get a header
    row from the record keys.
    """
    document.validate()
    writer = csv.writer(stream, lineterminator="\n")
    if document.kind == KINDS.MATRIX:
        for row in document.payload:
            writer.writerow([_cell(v) for v in row])
        return

    records = document.payload
    if not records:
        return
    header = list(records[0].keys())
    writer.writerow(header)
    for record in records:
        writer.writerow([_cell(record[key]) for key in header])


def write_document(
    document: OutputDocument,
    fmt: str,
    stream: TextIO,
    indent: int = 2,
) -> None:
    """Write a document to a stream in "json" or "csv" format."""
    if fmt == "csv":
        write_csv(document, stream)
    else:
        stream.write(document_to_json(document, indent=indent) + "\n")


def write_document_to_path(document: OutputDocument, fmt: str, output_path: Path, indent: int = 2) -> None:
    """
    Write a document to a file, creating parent directories.

    Args:
        document: Document to write
        fmt: "json" or "csv"
        output_path: Path to output file
        indent: JSON indentation
    """
    output_path.parent.mkdir(parents=True, exist_ok=True)

    with open(output_path, "w", newline="", encoding="utf-8") as f:
        write_document(document, fmt, f, indent=indent)
