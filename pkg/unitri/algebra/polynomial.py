"""
Exact sparse multivariate polynomials over the rationals.

A Polynomial is an immutable map from exponent tuples to Fraction
coefficients together with its variable count n. Zero coefficients are
never stored, so structural equality is mathematical equality.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import AmbientMismatchError

Scalar = Fraction
Monomial = Tuple[int, ...]
ScalarLike = Union[int, Fraction]


def grlex_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """Sort key for graded lexicographic order."""
    return (sum(monomial), monomial)


def format_scalar(value: ScalarLike) -> str:
    """Render a rational as `p` or `p/q`."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_terms(terms: Iterable[Tuple[Fraction, Monomial, Optional[str]]]) -> str:
    """
    Render signed terms in the shared text grammar.

    Args:
        terms: (coefficient, monomial, suffix) triples; suffix is an extra
            factor such as `d2` printed after the monomial

    Returns:
        Text such as `3/2 x1^2 x3 - x2 d3`, or `0` when there are no terms
    """
    pieces: List[str] = []
    for coeff, monomial, suffix in terms:
        factors = [
            f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}"
            for k, e in enumerate(monomial) if e
        ]
        if suffix:
            factors.append(suffix)
        magnitude = abs(coeff)
        if magnitude != 1 or not factors:
            factors.insert(0, format_scalar(magnitude))
        body = " ".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces) if pieces else "0"


class Polynomial:
    """An element of P_n = Q[x_1, ..., x_n]."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(
        self,
        n: int,
        terms: Union[Mapping[Sequence[int], ScalarLike], Iterable[Tuple[Sequence[int], ScalarLike]]] = (),
    ):
        """
        Build a polynomial from (exponents, coefficient) pairs.

        Repeated monomials are summed and zero coefficients dropped.

        Args:
            n: Number of variables
            terms: Mapping or iterable of (exponent vector, coefficient)

        Raises:
            ValueError: If an exponent vector has the wrong length or a negative entry
        """
        if n < 0:
            raise ValueError(f"Variable count must be non-negative: {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[Monomial, Fraction] = {}
        for exponents, coeff in items:
            monomial = tuple(int(e) for e in exponents)
            if len(monomial) != n:
                raise ValueError(f"Monomial {monomial} does not have {n} exponents")
            if any(e < 0 for e in monomial):
                raise ValueError(f"Negative exponent in monomial {monomial}")
            clean[monomial] = clean.get(monomial, Fraction(0)) + Fraction(coeff)
        self.n = n
        self._terms = {m: c for m, c in clean.items() if c != 0}
        self._hash: Optional[int] = None

    @classmethod
    def _wrap(cls, n: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # terms must already be canonical (right length, no zeros)
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._wrap(n, {})

    @classmethod
    def constant(cls, n: int, value: ScalarLike) -> "Polynomial":
        value = Fraction(value)
        return cls._wrap(n, {(0,) * n: value} if value else {})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n: int, j: int) -> "Polynomial":
        """The coordinate x_j (1-based)."""
        _check_index(n, j)
        exponents = [0] * n
        exponents[j - 1] = 1
        return cls._wrap(n, {tuple(exponents): Fraction(1)})

    @classmethod
    def monomial(cls, n: int, exponents: Sequence[int], coeff: ScalarLike = 1) -> "Polynomial":
        return cls(n, [(exponents, coeff)])

    # Inspection

    def terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def monomials(self) -> List[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, monomial: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def max_exponent(self) -> int:
        """Largest exponent of any single variable in any term."""
        return max((max(m, default=0) for m in self._terms), default=0)

    def max_support_index(self) -> int:
        """Smallest j with self in P_j = Q[x_1..x_j]; 0 for constants."""
        top = 0
        for monomial in self._terms:
            for k in range(len(monomial), top, -1):
                if monomial[k - 1]:
                    top = k
                    break
        return top

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Arithmetic

    def _coerce(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise AmbientMismatchError(self.n, other.n)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.n, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for m, c in other._terms.items():
            total = result.get(m, 0) + c
            if total:
                result[m] = total
            else:
                result.pop(m, None)
        return Polynomial._wrap(self.n, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "Polynomial":
        return (-self) + other

    def scale(self, factor: ScalarLike) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.n)
        return Polynomial._wrap(self.n, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: Union["Polynomial", ScalarLike]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                result[m] = result.get(m, 0) + c1 * c2
        return Polynomial._wrap(self.n, {m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Polynomial":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / Fraction(other))

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = Polynomial.one(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # Calculus and substitution

    def diff(self, j: int) -> "Polynomial":
        """Formal partial derivative with respect to x_j (1-based)."""
        _check_index(self.n, j)
        k = j - 1
        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m[k]
            if e:
                result[m[:k] + (e - 1,) + m[k + 1:]] = c * e
        return Polynomial._wrap(self.n, result)

    def integrate(self, j: int) -> "Polynomial":
        """Antiderivative in x_j with zero integration constant."""
        _check_index(self.n, j)
        k = j - 1
        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m[k] + 1
            result[m[:k] + (e,) + m[k + 1:]] = c / e
        return Polynomial._wrap(self.n, result)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """
        Evaluate with x_j replaced by images[j-1].

        Args:
            images: One polynomial per variable, all with the same variable count

        Returns:
            The substituted polynomial, living in the images' ring

        Raises:
            ValueError: If the number of images is not n
            AmbientMismatchError: If the images disagree on their variable count
        """
        if len(images) != self.n:
            raise ValueError(f"Expected {self.n} images, got {len(images)}")
        if not images:
            return self
        target = images[0].n
        for image in images[1:]:
            if image.n != target:
                raise AmbientMismatchError(target, image.n)

        powers: List[List[Polynomial]] = [[Polynomial.one(target)] for _ in images]

        def power(k: int, e: int) -> Polynomial:
            cache = powers[k]
            while len(cache) <= e:
                cache.append(cache[-1] * images[k])
            return cache[e]

        result: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for k, e in enumerate(m):
                if e:
                    term = term * power(k, e)
            for tm, tc in term._terms.items():
                result[tm] = result.get(tm, 0) + tc
        return Polynomial._wrap(target, {m: c for m, c in result.items() if c})

    # Comparison and display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.n, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_terms((c, m, None) for m, c in self.terms())

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, '{self}')"


def _check_index(n: int, j: int) -> None:
    if not 1 <= j <= n:
        raise ValueError(f"Variable index {j} out of range 1..{n}")


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def partial_derivative(p: Polynomial, j: int) -> Polynomial:
    return p.diff(j)


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    return p.substitute(images)


def max_support_index(p: Polynomial) -> int:
    return p.max_support_index()
