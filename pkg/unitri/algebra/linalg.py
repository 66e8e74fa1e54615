"""
Exact sparse linear algebra over Q.

Vectors are dicts column -> rational. Elimination is fraction-free: rows
are scaled to primitive integer vectors and combined as a*v - b*r, so no
rational arithmetic happens until the canonical basis is read out.
Pivoting is deterministic: the pivot of a row is its first nonzero column
under the column order, and the earliest inserted row with a given pivot
keeps it.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

Vector = Dict[Hashable, Fraction]
_IntRow = Dict[Hashable, int]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _primitive(row: _IntRow, first: Hashable) -> _IntRow:
    content = reduce(gcd, (abs(v) for v in row.values()), 0)
    if row[first] < 0:
        content = -content
    if content in (0, 1):
        return row
    return {c: v // content for c, v in row.items()}


def _to_int_row(vector: Mapping[Hashable, Any]) -> _IntRow:
    entries = {c: Fraction(v) for c, v in vector.items() if v}
    if not entries:
        return {}
    denominator = reduce(_lcm, (v.denominator for v in entries.values()), 1)
    return {c: int(v * denominator) for c, v in entries.items()}


class EchelonSpace:
    """
    Incrementally maintained echelon form of a span of sparse vectors.

    Args:
        key: Sort key defining the column order (default: natural order)
    """

    def __init__(self, key: Optional[Callable[[Any], Any]] = None):
        self._key = key if key is not None else (lambda c: c)
        self._rows: Dict[Hashable, _IntRow] = {}

    def _leading(self, row: _IntRow) -> Hashable:
        return min(row, key=self._key)

    def _reduce(self, vector: Mapping[Hashable, Any]) -> Tuple[Optional[Hashable], _IntRow]:
        row = _to_int_row(vector)
        while row:
            lead = self._leading(row)
            pivot_row = self._rows.get(lead)
            if pivot_row is None:
                return lead, _primitive(row, lead)
            a, b = pivot_row[lead], row[lead]
            combined = {c: a * v for c, v in row.items()}
            for c, v in pivot_row.items():
                total = combined.get(c, 0) - b * v
                if total:
                    combined[c] = total
                else:
                    combined.pop(c, None)
            row = combined
            if row:
                row = _primitive(row, self._leading(row))
        return None, {}

    def add(self, vector: Mapping[Hashable, Any]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        lead, row = self._reduce(vector)
        if lead is None:
            return False
        self._rows[lead] = row
        return True

    def extend(self, vectors: Iterable[Mapping[Hashable, Any]]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def contains(self, vector: Mapping[Hashable, Any]) -> bool:
        lead, _ = self._reduce(vector)
        return lead is None

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> List[Hashable]:
        return sorted(self._rows, key=self._key)

    def basis(self) -> List[Vector]:
        """Reduced row echelon basis (pivot entries 1), in pivot order."""
        reduced: Dict[Hashable, Vector] = {}
        for lead in reversed(self.pivots()):
            row = self._rows[lead]
            scale = Fraction(1, row[lead])
            vector: Vector = {c: v * scale for c, v in row.items()}
            for c in sorted(row, key=self._key):
                if c != lead and c in reduced and c in vector:
                    factor = vector[c]
                    for rc, rv in reduced[c].items():
                        total = vector.get(rc, Fraction(0)) - factor * rv
                        if total:
                            vector[rc] = total
                        else:
                            vector.pop(rc, None)
            reduced[lead] = vector
        return [reduced[lead] for lead in self.pivots()]


def rank(vectors: Iterable[Mapping[Hashable, Any]], key: Optional[Callable[[Any], Any]] = None) -> int:
    """Exact rank of a family of sparse vectors."""
    space = EchelonSpace(key)
    space.extend(vectors)
    return space.rank


def dense_rank(rows: Iterable[List[Any]]) -> int:
    """Exact rank of a dense matrix given as rows of rationals."""
    return rank({i: v for i, v in enumerate(row) if v} for row in rows)
