"""
Schema validation for unitri YAML documents.
"""

from typing import Any, Dict

from ..errors import SchemaError


class EndoSchema:
    """Schema validator for endomorphism documents."""

    def __init__(self):
        """Initialize the schema validator."""
        self.required_fields = ["n", "level", "images"]

    def validate(self, document: Dict[str, Any]) -> None:
        """
        Validate an endomorphism document against the schema.

        Args:
            document: Parsed YAML document

        Raises:
            SchemaError: If the document is invalid
        """
        if not isinstance(document, dict):
            raise SchemaError("Endomorphism document must be a dictionary")

        for field in self.required_fields:
            if field not in document:
                raise SchemaError(f"Missing required field: {field}")

        n = document["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise SchemaError("'n' must be an integer >= 2")

        level = document["level"]
        if not isinstance(level, int) or isinstance(level, bool) or level < 0:
            raise SchemaError("'level' must be a non-negative integer")

        self._validate_images(document["images"])

    def _validate_images(self, images: Any) -> None:
        """Validate the images section."""
        if not isinstance(images, list):
            raise SchemaError("'images' must be a list of records")

        for k, record in enumerate(images):
            if not isinstance(record, dict):
                raise SchemaError(f"'images[{k}]' must be a dictionary")
            for field in ("basis", "image"):
                if field not in record:
                    raise SchemaError(f"'images[{k}]' must have a '{field}' field")
            if not isinstance(record["basis"], str):
                raise SchemaError(
                    f"'images[{k}].basis' must be a quoted string like \"2:1\", got {record['basis']!r}"
                )
            if not isinstance(record["image"], (str, int)) or isinstance(record["image"], bool):
                raise SchemaError(f"'images[{k}].image' must be a derivation expression")


class SpannersSchema:
    """Schema validator for spanning-set documents."""

    def validate(self, document: Dict[str, Any]) -> None:
        """
        Validate a spanners document.

        Raises:
            SchemaError: If the document is invalid
        """
        if not isinstance(document, dict):
            raise SchemaError("Spanners document must be a dictionary")

        if "spanners" not in document:
            raise SchemaError("Missing required field: spanners")

        if "n" in document:
            n = document["n"]
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise SchemaError("'n' must be a positive integer")

        spanners = document["spanners"]
        if not isinstance(spanners, list):
            raise SchemaError("'spanners' must be a list")
        for s in spanners:
            if not isinstance(s, (str, int)) or isinstance(s, bool):
                raise SchemaError("'spanners' must be a list of derivation expressions")
