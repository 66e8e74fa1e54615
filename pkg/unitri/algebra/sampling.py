"""
Seeded random objects for reproducible runs (`--seed` on the CLI).
"""

import itertools
import random
from fractions import Fraction
from typing import List, Optional

from .automorphism import TriangularAutomorphism
from .derivation import UniDerivation
from .polynomial import Polynomial

SMALL_NUMERATORS = range(-3, 4)
SMALL_DENOMINATORS = (1, 1, 1, 2, 3)


def random_scalar(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.choice(SMALL_NUMERATORS), rng.choice(SMALL_DENOMINATORS))
        if value or not nonzero:
            return value


def random_polynomial(
    rng: random.Random,
    n: int,
    variables: int,
    max_degree: int,
    max_terms: int = 3,
    constant_term: bool = True,
) -> Polynomial:
    """A polynomial in x_1..x_variables of total degree <= max_degree."""
    monomials = [
        alpha + (0,) * (n - variables)
        for alpha in itertools.product(range(max_degree + 1), repeat=variables)
        if sum(alpha) <= max_degree and (constant_term or any(alpha))
    ]
    if not monomials:
        return Polynomial.zero(n)
    count = rng.randint(0, min(max_terms, len(monomials)))
    return Polynomial(n, [(m, random_scalar(rng)) for m in rng.sample(monomials, count)])


def random_derivation(
    rng: random.Random,
    n: int,
    max_degree: int = 3,
    ideal: int = 1,
    level: Optional[int] = None,
) -> UniDerivation:
    """
    A random element of u_{n,ideal}; with level set, of N_level as well.
    """
    coeffs: List[Polynomial] = []
    for j in range(1, n + 1):
        if j < ideal:
            coeffs.append(Polynomial.zero(n))
            continue
        f = random_polynomial(rng, n, j - 1, max_degree)
        if level is not None:
            f = Polynomial(n, [(m, c) for m, c in f.terms() if max(m, default=0) <= level])
        coeffs.append(f)
    return UniDerivation(n, coeffs)


def random_automorphism(
    rng: random.Random,
    n: int,
    tail_degree: int = 3,
    torus: bool = True,
) -> TriangularAutomorphism:
    """A random element of T^n x T_n with tails of degree <= tail_degree."""
    scales = [random_scalar(rng, nonzero=True) if torus else Fraction(1) for _ in range(n)]
    tails = [Polynomial.zero(n)]
    for j in range(2, n + 1):
        tails.append(random_polynomial(rng, n, j - 1, tail_degree, constant_term=False))
    return TriangularAutomorphism(n, scales, tails)
