"""
Scaled triangular polynomial automorphisms, the group T^n x T_n.

sigma(x_j) = c_j x_j + a_j with c_j nonzero and a_j a polynomial in
x_1..x_{j-1} without constant term. Such maps act on u_n by conjugation,
D -> sigma o D o sigma^{-1}.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..errors import AmbientMismatchError, TriangularityError
from .derivation import UniDerivation
from .polynomial import Polynomial, ScalarLike

logger = logging.getLogger(__name__)


class TriangularAutomorphism:
    """
    x_j -> c_j x_j + a_j.

    Immutable apart from `_inverse`, a memo filled by `invert` that takes
    no part in equality or hashing.
    """

    __slots__ = ("n", "scales", "tails", "_inverse")

    def __init__(self, n: int, scales: Sequence[ScalarLike], tails: Optional[Sequence[Polynomial]] = None):
        """
        Args:
            n: Number of variables
            scales: c_1, ..., c_n, all nonzero
            tails: a_1, ..., a_n (defaults to all zero)

        Raises:
            TriangularityError: If a tail depends on x_j or later, has a
                constant term, or a scale is zero
        """
        if len(scales) != n:
            raise TriangularityError(f"Expected {n} scales, got {len(scales)}")
        if tails is None:
            tails = [Polynomial.zero(n)] * n
        if len(tails) != n:
            raise TriangularityError(f"Expected {n} tails, got {len(tails)}")

        checked: List[Fraction] = []
        for j, c in enumerate(scales, start=1):
            c = Fraction(c)
            if not c:
                raise TriangularityError(f"Scale c_{j} must be nonzero")
            checked.append(c)
        for j, a in enumerate(tails, start=1):
            if a.n != n:
                raise AmbientMismatchError(n, a.n)
            if a.max_support_index() > j - 1:
                raise TriangularityError(f"Tail a_{j} must lie in P_{j - 1}, got {a}")
            if a.constant_term():
                raise TriangularityError(f"Tail a_{j} must vanish at the origin, got {a}")

        self.n = n
        self.scales = tuple(checked)
        self.tails = tuple(tails)
        self._inverse: Optional["TriangularAutomorphism"] = None

    @classmethod
    def identity(cls, n: int) -> "TriangularAutomorphism":
        return cls(n, [1] * n)

    @classmethod
    def torus(cls, scales: Sequence[ScalarLike]) -> "TriangularAutomorphism":
        return cls(len(scales), scales)

    @classmethod
    def from_images(cls, images: Sequence[Polynomial]) -> "TriangularAutomorphism":
        """Read c_j and a_j back from the images sigma(x_j)."""
        n = len(images)
        scales = []
        tails = []
        for j, image in enumerate(images, start=1):
            x_j = Polynomial.variable(n, j)
            c = image.coefficient(x_j.monomials()[0])
            scales.append(c)
            tails.append(image - x_j.scale(c))
        return cls(n, scales, tails)

    def images(self) -> List[Polynomial]:
        """sigma(x_1), ..., sigma(x_n)."""
        return [
            Polynomial.variable(self.n, j).scale(c) + a
            for j, (c, a) in enumerate(zip(self.scales, self.tails), start=1)
        ]

    def is_identity(self) -> bool:
        return all(c == 1 for c in self.scales) and all(a.is_zero() for a in self.tails)

    def to_lines(self, skip_identity: bool = False) -> List[str]:
        """One `xK -> c xK + tail` line per variable."""
        lines = []
        for j, image in enumerate(self.images(), start=1):
            if skip_identity and image == Polynomial.variable(self.n, j):
                continue
            lines.append(f"x{j} -> {image}")
        return lines

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriangularAutomorphism):
            return NotImplemented
        return self.n == other.n and self.scales == other.scales and self.tails == other.tails

    def __hash__(self) -> int:
        return hash((self.n, self.scales, self.tails))

    def __str__(self) -> str:
        return "; ".join(self.to_lines())

    def __repr__(self) -> str:
        return f"TriangularAutomorphism({self.n}, '{self}')"


def apply_to_poly(sigma: TriangularAutomorphism, p: Polynomial) -> Polynomial:
    """sigma(p): substitute x_j -> c_j x_j + a_j."""
    if p.n != sigma.n:
        raise AmbientMismatchError(sigma.n, p.n)
    return p.substitute(sigma.images())


def compose(sigma: TriangularAutomorphism, tau: TriangularAutomorphism) -> TriangularAutomorphism:
    """(sigma o tau)(x_j) = sigma(tau(x_j))."""
    if sigma.n != tau.n:
        raise AmbientMismatchError(sigma.n, tau.n)
    images = [apply_to_poly(sigma, image) for image in tau.images()]
    return TriangularAutomorphism.from_images(images)


def invert(sigma: TriangularAutomorphism) -> TriangularAutomorphism:
    """
    Triangular back-substitution: x_j -> c_j^{-1} (x_j - a_j(rho(x_1), ..., rho(x_{j-1}))).
    """
    if sigma._inverse is not None:
        return sigma._inverse
    n = sigma.n
    rho = [Polynomial.variable(n, j) for j in range(1, n + 1)]
    for j in range(n):
        # a_j only involves x_1..x_{j-1}, whose inverse images are already final
        tail_at_rho = sigma.tails[j].substitute(rho)
        rho[j] = (Polynomial.variable(n, j + 1) - tail_at_rho).scale(1 / sigma.scales[j])
    inverse = TriangularAutomorphism.from_images(rho)
    inverse._inverse = sigma
    sigma._inverse = inverse
    return inverse


class Conjugation:
    """
    The action D -> sigma o D o sigma^{-1} on u_n.

    The j-th coefficient of sigma.D is sigma(D(q_j)) with q_j = sigma^{-1}(x_j),
    i.e. sum_k sigma(f_k) * sigma(d_k q_j). The products sigma(d_k q_j) are
    computed once per sigma.
    """

    def __init__(self, sigma: TriangularAutomorphism):
        self.sigma = sigma
        n = sigma.n
        self._images = sigma.images()
        inverse_images = invert(sigma).images()
        # table[j][k] = sigma(d_{k+1} q_{j+1}); q_j only involves x_1..x_j
        self._table = [
            [apply_to_poly(sigma, q.diff(k + 1)) for k in range(j + 1)]
            for j, q in enumerate(inverse_images)
        ]
        self.n = n

    def __call__(self, D: UniDerivation) -> UniDerivation:
        if D.n != self.n:
            raise AmbientMismatchError(self.n, D.n)
        moved = [f.substitute(self._images) if f else f for f in D.coeffs]
        coeffs = []
        for row in self._table:
            total = Polynomial.zero(self.n)
            for f, entry in zip(moved, row):
                if f and entry:
                    total = total + f * entry
            coeffs.append(total)
        return UniDerivation(self.n, coeffs)


def act_on_derivation(sigma: TriangularAutomorphism, D: UniDerivation) -> UniDerivation:
    """sigma . D = sigma o D o sigma^{-1}."""
    return Conjugation(sigma)(D)
