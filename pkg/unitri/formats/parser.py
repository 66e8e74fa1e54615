"""
Loading and writing unitri documents.

Endomorphism and spanner documents are YAML; automorphisms use the
line-oriented text grammar.
"""

from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from ..algebra.automorphism import TriangularAutomorphism
from ..algebra.filtration import BasisIndex, SpannedSubalgebra, TruncatedLieMap, enumerate_basis
from ..errors import SchemaError
from .grammar import max_index, parse_automorphism, parse_derivation
from .schema import EndoSchema, SpannersSchema


def _load_yaml(path: Path) -> Any:
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")

    with open(path, "r") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise SchemaError(f"Invalid YAML syntax: {e}")

    if data is None:
        raise SchemaError(f"File is empty: {path}")
    return data


class EndoParser:
    """Parser for endomorphism documents."""

    def __init__(self):
        """Initialize the endomorphism parser."""
        self.schema = EndoSchema()

    def parse(self, path: Path) -> TruncatedLieMap:
        """
        Parse and validate an endomorphism file.

        Args:
            path: Path to the YAML document

        Returns:
            The map it describes

        Raises:
            SchemaError: If the document is invalid or does not list every
                basis index of N_level exactly once
            GrammarError: If an image expression does not parse
            FileNotFoundError: If the file doesn't exist
        """
        return self.from_document(_load_yaml(path))

    def from_document(self, document: Dict[str, Any]) -> TruncatedLieMap:
        """Build the map from an already loaded document."""
        self.schema.validate(document)
        n = document["n"]
        basis = enumerate_basis(n, document["level"])

        images: Dict[BasisIndex, str] = {}
        for record in document["images"]:
            try:
                index = BasisIndex.parse(record["basis"])
            except ValueError as e:
                raise SchemaError(str(e))
            if index in images:
                raise SchemaError(f"Duplicate basis index: {index}")
            if index.j > n or index.level > basis.level:
                raise SchemaError(f"Basis index {index} is not in N_{basis.level} for n = {n}")
            images[index] = str(record["image"])

        missing = [str(b) for b in basis.elements if b not in images]
        if missing:
            raise SchemaError(f"Missing images for basis indices: {', '.join(missing)}")

        return TruncatedLieMap(basis, tuple(parse_derivation(images[b], n) for b in basis.elements))


def endo_document(phi: TruncatedLieMap) -> Dict[str, Any]:
    """The YAML-ready form of a map."""
    return {
        "n": phi.n,
        "level": phi.level,
        "images": [{"basis": str(b), "image": str(D)} for b, D in phi.items()],
    }


def dump_endo(phi: TruncatedLieMap) -> str:
    return yaml.safe_dump(endo_document(phi), sort_keys=False)


class SpannersParser:
    """Parser for spanning-set documents."""

    def __init__(self):
        self.schema = SpannersSchema()

    def parse(self, path: Path, n: Optional[int] = None) -> SpannedSubalgebra:
        """
        Parse a spanners file; n comes from the argument, the document, or the
        largest index used, in that order, and must agree where given.
        """
        document = _load_yaml(path)
        self.schema.validate(document)
        texts = [str(s) for s in document["spanners"]]
        declared = document.get("n")
        if n is not None and declared is not None and n != declared:
            raise SchemaError(f"Document declares n = {declared}, expected {n}")
        if n is None:
            n = declared
        if n is None:
            n = max([2] + [max_index(t) for t in texts])
        return SpannedSubalgebra(n, tuple(parse_derivation(t, n) for t in texts))


def load_automorphism(path: Path, n: Optional[int] = None) -> TriangularAutomorphism:
    """Read an automorphism file."""
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return parse_automorphism(path.read_text(), n)
