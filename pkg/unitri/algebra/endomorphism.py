"""
Truncated endomorphisms of u_n and the checks run against them.

A map is known only through its images on the basis of N_d. The checks
here are the ones the monomorphism argument needs: the bracket law on
every pair whose bracket stays in N_d, injectivity on N_i, preservation of
the ideals u_{n,i}, and the shape phi(d_i) = lambda_i d_i + u_i.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import GeneratorError
from .automorphism import Conjugation, TriangularAutomorphism
from .derivation import DEFAULT_NILPOTENCY_CAP, UniDerivation, bracket, exp_ad, ideal_index
from .filtration import (
    BasisIndex,
    TruncatedLieMap,
    enumerate_basis,
    images_rank,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorDecomposition:
    """phi(d_i) = lambda_i d_i + u_i with u_i in u_{n,i+1}."""

    index: int
    scalar: Fraction
    tail: UniDerivation

    def target(self) -> UniDerivation:
        return UniDerivation.partial(self.tail.n, self.index).scale(self.scalar) + self.tail


@dataclass(frozen=True)
class HomomorphismViolation:
    """A basis pair (u, v) with phi([u, v]) != [phi(u), phi(v)]."""

    left: BasisIndex
    right: BasisIndex
    expected: UniDerivation
    actual: UniDerivation

    def to_dict(self) -> dict:
        return {
            "pair": [str(self.left), str(self.right)],
            "expected": str(self.expected),
            "actual": str(self.actual),
        }

    def __str__(self) -> str:
        return (
            f"[{self.left}, {self.right}]: expected phi([u,v]) = {self.expected}, "
            f"actual [phi(u), phi(v)] = {self.actual}"
        )


@dataclass(frozen=True)
class IdealViolation:
    """A basis element of u_{n,i} whose image leaves u_{n,i}."""

    index: BasisIndex
    image: UniDerivation

    def to_dict(self) -> dict:
        return {"basis": str(self.index), "image": str(self.image)}


def identity_map(n: int, d: int) -> TruncatedLieMap:
    basis = enumerate_basis(n, d)
    return TruncatedLieMap(basis, tuple(basis.derivations()))


def zero_map(n: int, d: int) -> TruncatedLieMap:
    basis = enumerate_basis(n, d)
    return TruncatedLieMap(basis, tuple(UniDerivation.zero(n) for _ in basis.elements))


def endo_from_automorphism(sigma: TriangularAutomorphism, d: int) -> TruncatedLieMap:
    """The map b -> sigma . b on the basis of N_d."""
    if d < 1:
        raise ValueError(f"Level must be at least 1, got {d}")
    basis = enumerate_basis(sigma.n, d)
    act = Conjugation(sigma)
    return TruncatedLieMap(basis, tuple(act(b) for b in basis.derivations()))


def endo_from_exp_ad(g: UniDerivation, d: int, cap: int = DEFAULT_NILPOTENCY_CAP) -> TruncatedLieMap:
    """
    The map b -> e^{ad(g)}(b) on the basis of N_d.

    Raises:
        NilpotencyCapExceeded: If the series does not terminate on some basis element
    """
    if d < 1:
        raise ValueError(f"Level must be at least 1, got {d}")
    basis = enumerate_basis(g.n, d)
    return TruncatedLieMap(basis, tuple(exp_ad(g, b, cap) for b in basis.derivations()))


def compose_maps(outer: TruncatedLieMap, inner: TruncatedLieMap) -> TruncatedLieMap:
    """
    outer o inner on the domain of inner.

    Raises:
        OutsideFiltrationError: If an image of inner leaves the domain of outer
    """
    return TruncatedLieMap(inner.domain, tuple(outer.image_of(D) for D in inner.images))


def checked_pairs(phi: TruncatedLieMap) -> List[Tuple[int, int]]:
    """
    Basis position pairs (a, b), a < b, whose bracket stays inside the domain.

    Pairs with level(u) + level(v) > d are left unchecked.
    """
    levels = [b.level for b in phi.domain.elements]
    size = len(levels)
    return [
        (a, b)
        for a in range(size)
        for b in range(a + 1, size)
        if levels[a] + levels[b] <= phi.level
    ]


def homomorphism_coverage(phi: TruncatedLieMap) -> Tuple[int, int]:
    """(checked, unchecked) counts of unordered basis pairs."""
    size = len(phi.domain)
    checked = len(checked_pairs(phi))
    return checked, size * (size - 1) // 2 - checked


def check_homomorphism(phi: TruncatedLieMap) -> Optional[HomomorphismViolation]:
    """
    Verify phi([u, v]) = [phi(u), phi(v)] on all basis pairs inside the budget.

    Returns:
        None if the law holds, otherwise the first violating pair in basis order
    """
    basis = phi.domain.derivations()
    for a, b in checked_pairs(phi):
        expected = phi.image_of(bracket(basis[a], basis[b]))
        actual = bracket(phi.images[a], phi.images[b])
        if expected != actual:
            violation = HomomorphismViolation(
                phi.domain.elements[a], phi.domain.elements[b], expected, actual
            )
            logger.debug("homomorphism violation %s", violation)
            return violation
    return None


def check_injectivity(phi: TruncatedLieMap, level: int) -> bool:
    """True iff phi restricted to N_level has trivial kernel."""
    if not 0 <= level <= phi.level:
        raise ValueError(f"Level {level} outside 0..{phi.level}")
    positions = phi.domain.restrict(level)
    return images_rank([phi.images[k] for k in positions]) == len(positions)


def check_ideal_preservation(phi: TruncatedLieMap) -> Optional[IdealViolation]:
    """First basis element b in u_{n,i} with phi(b) outside u_{n,i}, if any."""
    for index, image in phi.items():
        if ideal_index(image) < index.j:
            return IdealViolation(index, image)
    return None


def decompose_target(target: UniDerivation, i: int) -> GeneratorDecomposition:
    """
    Split target = lambda d_i + u with u in u_{n,i+1}.

    Raises:
        GeneratorError: If target is not in u_{n,i}, if the d_i coefficient
            is not a constant, or if it is zero
    """
    n = target.n
    if ideal_index(target) < i:
        raise GeneratorError("inclusion", i, f"phi(d{i}) = {target}")
    leading = target.coefficient(i)
    if not leading.is_constant():
        raise GeneratorError("not_scalar", i, f"coefficient of d{i} is {leading}")
    scalar = leading.constant_term()
    if not scalar:
        raise GeneratorError("zero_scalar", i, f"phi(d{i}) = {target}")
    tail = target - UniDerivation.partial(n, i).scale(scalar)
    return GeneratorDecomposition(i, scalar, tail)


def extract_generators(phi: TruncatedLieMap) -> List[GeneratorDecomposition]:
    """Decompose phi(d_i) for i = 1..n."""
    n = phi.n
    return [
        decompose_target(phi.image(BasisIndex(i, (0,) * (i - 1))), i)
        for i in range(1, n + 1)
    ]


def check_pairwise_commuting(targets: Sequence[UniDerivation]) -> Optional[Tuple[int, int]]:
    """First (i, j), 1-based with i < j, where [targets_i, targets_j] != 0."""
    for i in range(len(targets)):
        for j in range(i + 1, len(targets)):
            if not bracket(targets[i], targets[j]).is_zero():
                return i + 1, j + 1
    return None
