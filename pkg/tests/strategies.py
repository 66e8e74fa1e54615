"""Hypothesis strategies for polynomials, u_n and T^n x T_n."""

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from unitri.algebra.automorphism import TriangularAutomorphism
from unitri.algebra.derivation import UniDerivation
from unitri.algebra.polynomial import Polynomial


def scalars(nonzero: bool = False):
    values = st.builds(
        Fraction,
        st.integers(min_value=-3, max_value=3),
        st.sampled_from([1, 1, 2, 3]),
    )
    return values.filter(bool) if nonzero else values


@st.composite
def polynomials(draw, n: int, variables: int, max_degree: int = 3, max_terms: int = 3, constant_term: bool = True):
    """Polynomials in x_1..x_variables, living in P_n."""
    monomials = [
        alpha + (0,) * (n - variables)
        for alpha in itertools.product(range(max_degree + 1), repeat=variables)
        if sum(alpha) <= max_degree and (constant_term or any(alpha))
    ]
    if not monomials:
        return Polynomial.zero(n)
    chosen = draw(st.lists(st.sampled_from(monomials), max_size=max_terms, unique=True))
    return Polynomial(n, [(m, draw(scalars())) for m in chosen])


@st.composite
def derivations(draw, n: int, max_degree: int = 3, ideal: int = 1, level=None):
    """Elements of u_{n,ideal}, optionally restricted to N_level."""
    coeffs = []
    for j in range(1, n + 1):
        if j < ideal:
            coeffs.append(Polynomial.zero(n))
            continue
        f = draw(polynomials(n, j - 1, max_degree))
        if level is not None:
            f = Polynomial(n, [(m, c) for m, c in f.terms() if max(m, default=0) <= level])
        coeffs.append(f)
    return UniDerivation(n, coeffs)


@st.composite
def automorphisms(draw, n: int, tail_degree: int = 3, torus: bool = True):
    scales = [draw(scalars(nonzero=True)) if torus else Fraction(1) for _ in range(n)]
    tails = [Polynomial.zero(n)]
    for j in range(2, n + 1):
        tails.append(draw(polynomials(n, j - 1, tail_degree, constant_term=False)))
    return TriangularAutomorphism(n, scales, tails)


def small_n():
    return st.integers(min_value=2, max_value=4)
