"""
The Lie algebra u_n of unitriangular polynomial derivations.

An element is D = f_1 d_1 + ... + f_n d_n where f_j depends only on
x_1, ..., x_{j-1} (so f_1 is a constant). The bracket, the action on P_n,
the ideal chain u_{n,i} and adjoint exponentials live here.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Iterator, List, NewType, Sequence, Tuple

from ..errors import AmbientMismatchError, NilpotencyCapExceeded, TriangularityError
from .polynomial import Monomial, Polynomial, ScalarLike, format_terms, grlex_key

logger = logging.getLogger(__name__)

DEFAULT_NILPOTENCY_CAP = 64

# 1..n+1, where n+1 stands for the zero ideal u_{n,n+1}
IdealIndex = NewType("IdealIndex", int)


class UniDerivation:
    """An element sum_j f_j d_j of u_n."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: Sequence[Polynomial]):
        """
        Args:
            n: Number of variables
            coeffs: f_1, ..., f_n

        Raises:
            TriangularityError: If some f_j depends on x_j or a later variable
            AmbientMismatchError: If a coefficient lives in a different ring
        """
        if len(coeffs) != n:
            raise TriangularityError(f"Expected {n} coefficients, got {len(coeffs)}")
        for j, f in enumerate(coeffs, start=1):
            if f.n != n:
                raise AmbientMismatchError(n, f.n)
            if f.max_support_index() > j - 1:
                raise TriangularityError(
                    f"Coefficient of d{j} must lie in P_{j - 1}, got {f}"
                )
        self.n = n
        self.coeffs: Tuple[Polynomial, ...] = tuple(coeffs)
        self._hash = None

    @classmethod
    def _wrap(cls, n: int, coeffs: Sequence[Polynomial]) -> "UniDerivation":
        # u_n is closed under the operations that call this
        derivation = cls.__new__(cls)
        derivation.n = n
        derivation.coeffs = tuple(coeffs)
        derivation._hash = None
        return derivation

    @classmethod
    def zero(cls, n: int) -> "UniDerivation":
        return cls._wrap(n, [Polynomial.zero(n)] * n)

    @classmethod
    def partial(cls, n: int, j: int) -> "UniDerivation":
        """The partial derivative d_j."""
        coeffs = [Polynomial.zero(n)] * n
        coeffs[j - 1] = Polynomial.one(n)
        return cls(n, coeffs)

    @classmethod
    def monomial(cls, n: int, j: int, alpha: Sequence[int], coeff: ScalarLike = 1) -> "UniDerivation":
        """The element coeff * x^alpha d_j, alpha given on x_1..x_{j-1}."""
        if len(alpha) != j - 1:
            raise TriangularityError(f"d{j} takes exponents on {j - 1} variables, got {tuple(alpha)}")
        coeffs = [Polynomial.zero(n)] * n
        coeffs[j - 1] = Polynomial.monomial(n, tuple(alpha) + (0,) * (n - j + 1), coeff)
        return cls(n, coeffs)

    def coefficient(self, j: int) -> Polynomial:
        return self.coeffs[j - 1]

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.coeffs)

    def terms(self) -> Iterator[Tuple[int, Monomial, Fraction]]:
        """(j, monomial, coefficient) ordered by slot, then descending grlex."""
        for j, f in enumerate(self.coeffs, start=1):
            for monomial, c in f.terms():
                yield j, monomial, c

    def max_exponent(self) -> int:
        return max((f.max_exponent() for f in self.coeffs), default=0)

    # Linear structure

    def _check(self, other: "UniDerivation") -> None:
        if other.n != self.n:
            raise AmbientMismatchError(self.n, other.n)

    def __add__(self, other: "UniDerivation") -> "UniDerivation":
        if not isinstance(other, UniDerivation):
            return NotImplemented
        self._check(other)
        return UniDerivation._wrap(self.n, [f + g for f, g in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "UniDerivation") -> "UniDerivation":
        if not isinstance(other, UniDerivation):
            return NotImplemented
        self._check(other)
        return UniDerivation._wrap(self.n, [f - g for f, g in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "UniDerivation":
        return UniDerivation._wrap(self.n, [-f for f in self.coeffs])

    def scale(self, factor: ScalarLike) -> "UniDerivation":
        return UniDerivation._wrap(self.n, [f.scale(factor) for f in self.coeffs])

    def __mul__(self, factor: ScalarLike) -> "UniDerivation":
        if not isinstance(factor, (int, Fraction)):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __truediv__(self, factor: ScalarLike) -> "UniDerivation":
        if not isinstance(factor, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / Fraction(factor))

    # Lie structure

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniDerivation):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs))
        return self._hash

    def __str__(self) -> str:
        return format_terms((c, m, f"d{j}") for j, m, c in self.terms())

    def __repr__(self) -> str:
        return f"UniDerivation({self.n}, '{self}')"


def apply(D: UniDerivation, p: Polynomial) -> Polynomial:
    """D(p) = sum_j f_j * d_j(p)."""
    if p.n != D.n:
        raise AmbientMismatchError(D.n, p.n)
    result = Polynomial.zero(D.n)
    for j, f in enumerate(D.coeffs, start=1):
        if f:
            result = result + f * p.diff(j)
    return result


def bracket(D: UniDerivation, E: UniDerivation) -> UniDerivation:
    """[D, E] = sum_j (D(g_j) - E(f_j)) d_j."""
    D._check(E)
    coeffs = [apply(D, g) - apply(E, f) for f, g in zip(D.coeffs, E.coeffs)]
    return UniDerivation._wrap(D.n, coeffs)


def ideal_index(D: UniDerivation) -> IdealIndex:
    """Largest i with D in u_{n,i}; n+1 for the zero derivation."""
    for j, f in enumerate(D.coeffs, start=1):
        if f:
            return IdealIndex(j)
    return IdealIndex(D.n + 1)


def ad_power(g: UniDerivation, D: UniDerivation, k: int) -> UniDerivation:
    """ad(g)^k (D)."""
    if k < 0:
        raise ValueError(f"Power must be non-negative: {k}")
    g._check(D)
    for _ in range(k):
        if D.is_zero():
            break
        D = bracket(g, D)
    return D


def exp_ad(g: UniDerivation, D: UniDerivation, cap: int = DEFAULT_NILPOTENCY_CAP) -> UniDerivation:
    """
    e^{ad(g)}(D) = sum_i ad(g)^i(D) / i!, stopping at the first vanishing power.

    Args:
        g: Element whose adjoint flow is applied
        D: Argument
        cap: Largest power of ad(g) that may be computed

    Returns:
        The exact finite sum

    Raises:
        NilpotencyCapExceeded: If ad(g)^cap(D) is still nonzero
    """
    if cap < 1:
        raise ValueError(f"Nilpotency cap must be at least 1: {cap}")
    g._check(D)
    total = D
    power = D
    for i in range(1, cap + 1):
        power = bracket(g, power)
        if power.is_zero():
            logger.debug("exp_ad(%s) on %s terminated after %s steps", g, D, i)
            return total
        total = total + power.scale(Fraction(1, factorial(i)))
    raise NilpotencyCapExceeded(cap)


def shift_embedding(D: UniDerivation, n: int, offset: int) -> UniDerivation:
    """
    Embed u_m into u_n through x_k -> x_{k+offset}, d_k -> d_{k+offset}.

    With offset = i - 1 and m = n - i + 1 the image of u_m is the subalgebra
    K d_i + K[x_i] d_{i+1} + ... + K[x_i, ..., x_{n-1}] d_n.
    """
    m = D.n
    if offset < 0 or m + offset > n:
        raise ValueError(f"Cannot embed u_{m} into u_{n} with offset {offset}")
    pad = (0,) * (n - m - offset)
    coeffs = [Polynomial.zero(n)] * n
    for j, f in enumerate(D.coeffs, start=1):
        coeffs[j + offset - 1] = Polynomial(
            n, [((0,) * offset + monomial + pad, c) for monomial, c in f.terms()]
        )
    return UniDerivation(n, coeffs)


def basis_sort_key(j: int, alpha: Sequence[int]) -> Tuple[int, int, Tuple[int, ...]]:
    """Canonical order of the elements x^alpha d_j: by slot, then ascending grlex."""
    return (j,) + grlex_key(tuple(alpha))


def split_terms(D: UniDerivation) -> List[Tuple[int, Tuple[int, ...], Fraction]]:
    """(j, alpha on x_1..x_{j-1}, coefficient) for every term of D."""
    return [(j, m[: j - 1], c) for j, m, c in D.terms()]
