"""
Text grammars for polynomials, derivations and triangular automorphisms.

    polynomial   3/2 x1^2 x3 - x2
    derivation   d1 + 3/2 x1^2 d3 - x1 x2 d3
    automorphism x2 -> x2 + x1^2        (one line per variable)

Whitespace is insignificant, `*` between factors is accepted, and parsing
is exact. Output of the formatters in unitri.algebra parses back to the
same value.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..algebra.automorphism import TriangularAutomorphism
from ..algebra.derivation import UniDerivation
from ..algebra.polynomial import Polynomial
from ..errors import GrammarError

_TOKEN = re.compile(
    r"(?P<space>\s+)|(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<var>x\d+)"
    r"|(?P<der>d\d+)|(?P<caret>\^)|(?P<sign>[+-])|(?P<star>\*)"
)
_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")


@dataclass
class _Term:
    coeff: Fraction
    exponents: Dict[int, int] = field(default_factory=dict)
    derivation: Optional[int] = None
    position: int = 0


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise GrammarError(f"Unexpected character '{text[pos]}'", text, pos)
        kind = match.lastgroup
        if kind != "space":
            tokens.append((kind, match.group(kind), pos))
        pos = match.end()
    return tokens


def _parse_terms(text: str) -> List[_Term]:
    tokens = _tokenize(text)
    if not tokens:
        raise GrammarError("Empty expression", text, 0)
    terms: List[_Term] = []
    k = 0

    def peek(kind: str) -> bool:
        return k < len(tokens) and tokens[k][0] == kind

    sign = 1
    if peek("sign"):
        sign = -1 if tokens[k][1] == "-" else 1
        k += 1
    while True:
        if k >= len(tokens):
            raise GrammarError("Expected a term", text, len(text))
        term = _Term(Fraction(sign), position=tokens[k][2])
        seen = False
        if peek("number"):
            numerator, _, denominator = re.sub(r"\s", "", tokens[k][1]).partition("/")
            if denominator and not int(denominator):
                raise GrammarError("Zero denominator", text, tokens[k][2])
            term.coeff *= Fraction(int(numerator), int(denominator or 1))
            k += 1
            seen = True
        while peek("var") or peek("der") or peek("star"):
            kind, value, pos = tokens[k]
            k += 1
            if kind == "star":
                if not (peek("var") or peek("der")):
                    raise GrammarError("Expected a factor after '*'", text, pos)
                continue
            index = int(value[1:])
            if index < 1:
                raise GrammarError(f"Variable indices start at 1, got '{value}'", text, pos)
            seen = True
            if kind == "der":
                if term.derivation is not None:
                    raise GrammarError("A term may contain only one dK", text, pos)
                term.derivation = index
                continue
            exponent = 1
            if peek("caret"):
                k += 1
                if not peek("number") or "/" in tokens[k][1]:
                    raise GrammarError("Expected a natural exponent after '^'", text, tokens[k - 1][2])
                exponent = int(tokens[k][1])
                k += 1
            term.exponents[index] = term.exponents.get(index, 0) + exponent
        if not seen:
            where = tokens[k][2] if k < len(tokens) else len(text)
            raise GrammarError("Expected a coefficient or factor", text, where)
        terms.append(term)
        if k >= len(tokens):
            return terms
        if not peek("sign"):
            raise GrammarError(f"Unexpected '{tokens[k][1]}'", text, tokens[k][2])
        sign = -1 if tokens[k][1] == "-" else 1
        k += 1


def _max_index(terms: List[_Term]) -> int:
    top = 0
    for term in terms:
        top = max([top] + list(term.exponents))
        if term.derivation is not None:
            top = max(top, term.derivation)
    return top


def _check_n(terms: List[_Term], n: int, text: str) -> None:
    for term in terms:
        indices = list(term.exponents) + ([term.derivation] if term.derivation else [])
        if any(index > n for index in indices):
            raise GrammarError(f"Index exceeds the variable count n = {n}", text, term.position)


def _monomial(term: _Term, n: int) -> Tuple[int, ...]:
    return tuple(term.exponents.get(k, 0) for k in range(1, n + 1))


def max_index(text: str) -> int:
    """Largest variable or derivation index used in an expression."""
    return _max_index(_parse_terms(text))


def parse_polynomial(text: str, n: Optional[int] = None) -> Polynomial:
    """
    Parse `3/2 x1^2 x3 - x2`.

    Args:
        text: Polynomial expression
        n: Variable count; inferred from the largest index when omitted

    Raises:
        GrammarError: On syntax errors or indices above n
    """
    terms = _parse_terms(text)
    for term in terms:
        if term.derivation is not None:
            raise GrammarError("Unexpected dK in a polynomial", text, term.position)
    if n is None:
        n = _max_index(terms)
    _check_n(terms, n, text)
    return Polynomial(n, [(_monomial(t, n), t.coeff) for t in terms])


def parse_derivation(text: str, n: Optional[int] = None) -> UniDerivation:
    """
    Parse `d1 + 3/2 x1^2 d3 - x1 x2 d3`.

    A lone `0` is the zero derivation.

    Raises:
        GrammarError: On syntax errors, terms without dK, or indices above n
        TriangularityError: If the result is not in u_n
    """
    terms = _parse_terms(text)
    for term in terms:
        if term.derivation is None and (term.coeff != 0 or term.exponents):
            raise GrammarError("Each term needs a dK factor", text, term.position)
    if n is None:
        n = _max_index(terms)
    _check_n(terms, n, text)
    coeffs: List[List[Tuple[Tuple[int, ...], Fraction]]] = [[] for _ in range(n)]
    for term in terms:
        if term.derivation is not None:
            coeffs[term.derivation - 1].append((_monomial(term, n), term.coeff))
    return UniDerivation(n, [Polynomial(n, c) for c in coeffs])


def parse_automorphism(text: str, n: Optional[int] = None) -> TriangularAutomorphism:
    """
    Parse lines `xK -> c xK + tail`; omitted variables map to themselves.

    `#` starts a comment. A line `n = N` fixes the variable count.

    Raises:
        GrammarError: On malformed lines, duplicate variables or indices above n
        TriangularityError: If the images do not define an element of T^n x T_n
    """
    images: Dict[int, Tuple[str, int]] = {}
    offset = 0
    for line in text.splitlines(keepends=True):
        start = offset
        offset += len(line)
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        header = _HEADER.match(body)
        if header:
            declared = int(header.group(1))
            if n is not None and n != declared:
                raise GrammarError(f"Header declares n = {declared}, expected {n}", text, start)
            n = declared
            continue
        left, arrow, right = body.partition("->")
        match = re.fullmatch(r"\s*x(\d+)\s*", left)
        if not arrow or not match:
            raise GrammarError("Expected 'xK -> polynomial'", text, start)
        j = int(match.group(1))
        if j < 1 or j in images:
            raise GrammarError(f"Invalid or repeated variable x{j}", text, start)
        images[j] = (right, start + len(left) + len(arrow))

    parsed: Dict[int, List[_Term]] = {}
    top = max(images, default=0)
    for j, (right, position) in images.items():
        try:
            parsed[j] = _parse_terms(right)
        except GrammarError as e:
            raise GrammarError(e.message, text, position + e.column - 1) from e
        top = max(top, _max_index(parsed[j]))
    if n is None:
        n = top
    if top > n:
        raise GrammarError(f"Index exceeds the variable count n = {n}", text, 0)

    result = [Polynomial.variable(n, j) for j in range(1, n + 1)]
    for j, terms in parsed.items():
        if any(t.derivation is not None for t in terms):
            raise GrammarError("Unexpected dK in an automorphism", text, images[j][1])
        result[j - 1] = Polynomial(n, [(_monomial(t, n), t.coeff) for t in terms])
    return TriangularAutomorphism.from_images(result)


def format_automorphism(sigma: TriangularAutomorphism) -> str:
    """Automorphism file text, with an `n = N` header."""
    return "\n".join([f"n = {sigma.n}"] + sigma.to_lines()) + "\n"
