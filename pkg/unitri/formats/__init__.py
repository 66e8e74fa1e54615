"""
Formats module - text grammars, YAML documents and schema validation.
"""

from .grammar import format_automorphism, parse_automorphism, parse_derivation, parse_polynomial
from .parser import EndoParser, SpannersParser, dump_endo, load_automorphism
from .schema import EndoSchema, SpannersSchema

__all__ = [
    "parse_polynomial",
    "parse_derivation",
    "parse_automorphism",
    "format_automorphism",
    "EndoParser",
    "SpannersParser",
    "dump_endo",
    "load_automorphism",
    "EndoSchema",
    "SpannersSchema",
]
