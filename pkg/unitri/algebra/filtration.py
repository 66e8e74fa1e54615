"""
The finite-dimensional filtration N_0 ⊂ N_1 ⊂ ... of u_n.

N_d is spanned by the monomial derivations x^alpha d_j with every exponent
alpha_k <= d; equivalently it is the set of D with ad(d_j)^{d+1}(D) = 0 for
all j. This module enumerates those bases, computes coordinates, derived
spans and derived lengths of truncated spanning sets, and ranks of linear
maps defined on a basis.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import AmbientMismatchError, FiltrationNotPreservedError, OutsideFiltrationError
from .derivation import UniDerivation, basis_sort_key, bracket, ideal_index, shift_embedding, split_terms
from .linalg import EchelonSpace, rank

logger = logging.getLogger(__name__)

Column = Tuple[int, Tuple[int, ...]]


def column_key(column: Column):
    return basis_sort_key(*column)


@dataclass(frozen=True)
class BasisIndex:
    """The basis element x^alpha d_j, alpha on x_1..x_{j-1}."""

    j: int
    alpha: Tuple[int, ...]

    @property
    def level(self) -> int:
        return max(self.alpha, default=0)

    def element(self, n: int) -> UniDerivation:
        return UniDerivation.monomial(n, self.j, self.alpha)

    def sort_key(self):
        return basis_sort_key(self.j, self.alpha)

    def __str__(self) -> str:
        return f"{self.j}:{','.join(str(a) for a in self.alpha)}"

    @classmethod
    def parse(cls, text: str) -> "BasisIndex":
        """Read the `j:a1,...,a_{j-1}` form."""
        head, sep, tail = str(text).strip().partition(":")
        if not sep or not head.strip().isdigit():
            raise ValueError(f"Invalid basis index '{text}': expected 'j:a1,...,a_(j-1)'")
        j = int(head)
        parts = [p.strip() for p in tail.split(",")] if tail.strip() else []
        if not all(p.isdigit() for p in parts):
            raise ValueError(f"Invalid basis index '{text}': exponents must be natural numbers")
        alpha = tuple(int(p) for p in parts)
        if j < 1 or len(alpha) != j - 1:
            raise ValueError(f"Invalid basis index '{text}': d{j} needs {max(j - 1, 0)} exponents")
        return cls(j, alpha)


@dataclass(frozen=True)
class FiltrationBasis:
    """Ordered monomial basis of N_level."""

    n: int
    level: int
    elements: Tuple[BasisIndex, ...]
    _positions: Dict[BasisIndex, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self._positions.update((b, k) for k, b in enumerate(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, index: BasisIndex) -> int:
        return self._positions[index]

    def derivations(self) -> List[UniDerivation]:
        return [b.element(self.n) for b in self.elements]

    def restrict(self, level: int) -> List[int]:
        """Positions of the N_level sub-basis."""
        return [k for k, b in enumerate(self.elements) if b.level <= level]

    def ideal_part(self, i: int) -> List[int]:
        """Positions of the N_level ∩ u_{n,i} sub-basis."""
        return [k for k, b in enumerate(self.elements) if b.j >= i]


def dimension(n: int, d: int) -> int:
    """dim N_d = sum_{j=1}^n (d+1)^{j-1}."""
    return sum((d + 1) ** (j - 1) for j in range(1, n + 1))


def _basis_indices(n: int, d: int) -> List[BasisIndex]:
    elements = []
    for j in range(1, n + 1):
        alphas = sorted(itertools.product(range(d + 1), repeat=j - 1), key=lambda a: (sum(a), a))
        elements.extend(BasisIndex(j, alpha) for alpha in alphas)
    return elements


def enumerate_basis(n: int, d: int) -> FiltrationBasis:
    """
    Ordered basis of N_d: by slot j, then ascending graded lex on alpha.

    Raises:
        ValueError: If n < 2 or d < 0
    """
    if n < 2:
        raise ValueError(f"u_n needs n >= 2, got {n}")
    if d < 0:
        raise ValueError(f"Filtration level must be non-negative, got {d}")
    return FiltrationBasis(n, d, tuple(_basis_indices(n, d)))


def membership_level(D: UniDerivation) -> int:
    """Smallest d with D in N_d."""
    return D.max_exponent()


def coords(D: UniDerivation, basis: FiltrationBasis) -> List[Fraction]:
    """
    Exact coordinates of D in the monomial basis.

    Raises:
        OutsideFiltrationError: If a monomial of D has an exponent above basis.level
    """
    if D.n != basis.n:
        raise AmbientMismatchError(basis.n, D.n)
    vector = [Fraction(0)] * len(basis)
    for j, alpha, c in split_terms(D):
        if max(alpha, default=0) > basis.level:
            raise OutsideFiltrationError(basis.level, BasisIndex(j, alpha))
        vector[basis.position(BasisIndex(j, alpha))] = c
    return vector


def derivation_vector(D: UniDerivation) -> Dict[Column, Fraction]:
    """Sparse coordinates keyed by (j, alpha), valid at every level."""
    return {(j, alpha): c for j, alpha, c in split_terms(D)}


def vector_to_derivation(n: int, vector: Mapping[Column, Fraction]) -> UniDerivation:
    total = UniDerivation.zero(n)
    for (j, alpha), c in sorted(vector.items(), key=lambda item: column_key(item[0])):
        total = total + UniDerivation.monomial(n, j, alpha, c)
    return total


def span_basis(n: int, derivations: Iterable[UniDerivation]) -> List[UniDerivation]:
    """Canonical (reduced row echelon) basis of the span of derivations."""
    space = EchelonSpace(column_key)
    space.extend(derivation_vector(D) for D in derivations)
    return [vector_to_derivation(n, v) for v in space.basis()]


@dataclass(frozen=True)
class SpannedSubalgebra:
    """A finite list of elements of u_n; closure under bracket is not assumed."""

    n: int
    spanners: Tuple[UniDerivation, ...]

    def __post_init__(self) -> None:
        for D in self.spanners:
            if D.n != self.n:
                raise AmbientMismatchError(self.n, D.n)

    def max_level(self) -> int:
        return max((membership_level(D) for D in self.spanners), default=0)


def _check_budget(S: SpannedSubalgebra, budget_level: int) -> None:
    for D in S.spanners:
        if membership_level(D) > budget_level:
            raise OutsideFiltrationError(budget_level, D)


def derived_span(S: SpannedSubalgebra, budget_level: int) -> List[UniDerivation]:
    """
    Basis of span{[s, t] | s, t in S}.

    Args:
        S: Spanning set, every element in N_budget_level
        budget_level: Filtration level bounding the spanners; the result lies
            in N_{2 * budget_level}

    Returns:
        The canonical row-reduced basis of the bracket span

    Raises:
        OutsideFiltrationError: If a spanner is above budget_level
    """
    _check_budget(S, budget_level)
    space = EchelonSpace(column_key)
    spanners = S.spanners
    for a in range(len(spanners)):
        for b in range(a + 1, len(spanners)):
            space.add(derivation_vector(bracket(spanners[a], spanners[b])))
    return [vector_to_derivation(S.n, v) for v in space.basis()]


def derived_series(S: SpannedSubalgebra, budget_level: int) -> List[List[UniDerivation]]:
    """Bases of the nonzero terms span(S), [span, span], ... of the truncated derived series."""
    _check_budget(S, budget_level)
    current = span_basis(S.n, S.spanners)
    level = budget_level
    series = []
    while current:
        series.append(current)
        current = derived_span(SpannedSubalgebra(S.n, tuple(current)), level)
        level *= 2
    logger.debug("derived series of %s spanners: lengths %s", len(S.spanners), [len(t) for t in series])
    return series


def derived_length(S: SpannedSubalgebra, budget_level: int) -> int:
    """
    Number of nonzero terms of the derived series of span(S).

    This is a lower bound for the derived length of the Lie algebra
    generated by S; see ideal_length_certificate for where it is exact.
    """
    return len(derived_series(S, budget_level))


def subalgebra_g(n: int, i: int, level: int) -> SpannedSubalgebra:
    """K d_i + u_{n,i+1}, truncated to N_level."""
    basis = enumerate_basis(n, level)
    spanners = [UniDerivation.partial(n, i)]
    spanners.extend(b.element(n) for b in basis.elements if b.j > i)
    return SpannedSubalgebra(n, tuple(spanners))


def subalgebra_h(n: int, i: int, level: int) -> SpannedSubalgebra:
    """K d_i + K[x_i] d_{i+1} + ... + K[x_i..x_{n-1}] d_n, truncated to N_level."""
    m = n - i + 1
    spanners = [shift_embedding(b.element(m), n, i - 1) for b in _basis_indices(m, level)]
    return SpannedSubalgebra(n, tuple(spanners))


@dataclass(frozen=True)
class LengthCertificate:
    """Bounds on l(u_{n,i}): lower from a truncation, upper from ideal indices."""

    n: int
    i: int
    level: int
    lower: int
    upper: Optional[int]

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper


def ideal_length_certificate(n: int, i: int, level: int) -> LengthCertificate:
    """
    Certify l(u_{n,i}) = n - i + 1 at a truncation level.

    The lower bound is the derived length of the basis of N_level ∩ u_{n,i}.
    The upper bound n - i + 1 holds when every term of the computed series
    sits one ideal deeper than the previous one (brackets on the diagonal
    raise ideal_index), which is checked exactly term by term.
    """
    basis = enumerate_basis(n, level)
    S = SpannedSubalgebra(n, tuple(basis.derivations()[k] for k in basis.ideal_part(i)))
    series = derived_series(S, level)
    deepening = all(
        min(ideal_index(D) for D in term) >= i + k for k, term in enumerate(series)
    )
    return LengthCertificate(n, i, level, len(series), n - i + 1 if deepening else None)


@dataclass(frozen=True)
class TruncatedLieMap:
    """A linear map on N_d given by the images of its basis elements."""

    domain: FiltrationBasis
    images: Tuple[UniDerivation, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.domain):
            raise ValueError(f"Expected {len(self.domain)} images, got {len(self.images)}")
        for D in self.images:
            if D.n != self.domain.n:
                raise AmbientMismatchError(self.domain.n, D.n)

    @property
    def n(self) -> int:
        return self.domain.n

    @property
    def level(self) -> int:
        return self.domain.level

    def image(self, index: BasisIndex) -> UniDerivation:
        return self.images[self.domain.position(index)]

    def image_of(self, D: UniDerivation) -> UniDerivation:
        """
        The linear extension applied to D.

        Raises:
            OutsideFiltrationError: If D is not in N_level
        """
        if D.n != self.n:
            raise AmbientMismatchError(self.n, D.n)
        total = UniDerivation.zero(self.n)
        for j, alpha, c in split_terms(D):
            if max(alpha, default=0) > self.level:
                raise OutsideFiltrationError(self.level, BasisIndex(j, alpha))
            total = total + self.images[self.domain.position(BasisIndex(j, alpha))].scale(c)
        return total

    def items(self) -> List[Tuple[BasisIndex, UniDerivation]]:
        return list(zip(self.domain.elements, self.images))


def rank_of(M: TruncatedLieMap, sublevel: int) -> int:
    """
    Exact rank of M restricted to N_sublevel -> N_sublevel.

    Raises:
        ValueError: If sublevel exceeds the domain level
        FiltrationNotPreservedError: If some image of a N_sublevel basis element
            leaves N_sublevel
    """
    if not 0 <= sublevel <= M.level:
        raise ValueError(f"Sublevel {sublevel} outside 0..{M.level}")
    vectors = []
    for k in M.domain.restrict(sublevel):
        image = M.images[k]
        if membership_level(image) > sublevel:
            raise FiltrationNotPreservedError(sublevel, M.domain.elements[k], image)
        vectors.append(derivation_vector(image))
    return rank(vectors, column_key)


def images_rank(images: Sequence[UniDerivation]) -> int:
    """Rank of a family of derivations, at whatever level they live."""
    return rank((derivation_vector(D) for D in images), column_key)
