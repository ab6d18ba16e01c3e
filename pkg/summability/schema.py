"""
Output document schema for the summability CLI.
Defines document kinds, value representation tags and the document container.
"""

from dataclasses import dataclass, field
from typing import Any


# Schema version for tracking changes
SCHEMA_VERSION = "1.0.0"


@dataclass
class DocumentKinds:
    """
    Document kinds emitted by the CLI.

    Each kind corresponds to one subcommand.
    """

    MATRIX: str = "matrix"
    COLUMN_SUMS: str = "column_sums"
    BERNOULLI: str = "bernoulli"
    VERIFICATION: str = "verification"

    def get_all_types(self) -> list[str]:
        """Return all document kinds as a list."""
        return [self.MATRIX, self.COLUMN_SUMS, self.BERNOULLI, self.VERIFICATION]

    def validate_type(self, kind: str) -> bool:
        """Check if a document kind is valid."""
        return kind in self.get_all_types()


@dataclass
class RepresentationTags:
    """
    Representation tags carried by every numeric payload value.

    Exact tags round-trip losslessly; "float" marks double-precision values.
    """

    EXACT_RATIONAL: str = "exact-rational"
    EXACT_COMPLEX_RATIONAL: str = "exact-complex-rational"
    PI_GRADED: str = "pi-graded"
    FLOAT: str = "float"

    def get_all_types(self) -> list[str]:
        """Return all representation tags as a list."""
        return [self.EXACT_RATIONAL, self.EXACT_COMPLEX_RATIONAL, self.PI_GRADED, self.FLOAT]

    def validate_type(self, tag: str) -> bool:
        """Check if a representation tag is valid."""
        return tag in self.get_all_types()


KINDS = DocumentKinds()
TAGS = RepresentationTags()


def is_tagged_value(obj: Any) -> bool:
    """A tagged value is a dict with exactly the keys "tag" and "value"."""
    return isinstance(obj, dict) and set(obj) == {"tag", "value"}


@dataclass
class OutputDocument:
    """
    Top-level CLI output: {"kind", "metadata", "payload"}.

    Matrix payloads are lists of rows of tagged values; every other kind
    carries a list of records whose numeric fields are tagged values.
    """

    kind: str
    metadata: dict[str, Any] = field(default_factory=dict)
    payload: Any = field(default_factory=list)

    def validate(self) -> bool:
        """
        Validate the document structure.

        Returns:
            True if the document is valid, raises ValueError otherwise
        """
        if not KINDS.validate_type(self.kind):
            raise ValueError(f"Invalid document kind: {self.kind}")
        self._validate_values(self.payload)
        return True

    def _validate_values(self, obj: Any) -> None:
        if is_tagged_value(obj):
            if not TAGS.validate_type(obj["tag"]):
                raise ValueError(f"Invalid representation tag: {obj['tag']}")
            if not isinstance(obj["value"], str):
                raise ValueError(f"Tagged value must be a string: {obj['value']!r}")
        elif isinstance(obj, dict):
            for value in obj.values():
                self._validate_values(value)
        elif isinstance(obj, list):
            for value in obj:
                self._validate_values(value)
        elif not isinstance(obj, (bool, int, str)):
            # bare numbers would lose their representation
            raise ValueError(f"Untagged numeric value in payload: {obj!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "metadata": {"schema_version": SCHEMA_VERSION, **self.metadata},
            "payload": self.payload,
        }
