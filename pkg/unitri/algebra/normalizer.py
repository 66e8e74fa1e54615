"""
Solving sigma . d_i = d'_i for sigma in T^n x T_n, and normalizing maps by it.

Applied to x_j, sigma o d_i = d'_i o sigma reads d'_i(c_j x_j + a_j) = delta_ij.
With d'_i = lambda_i d_i + sum_{k>i} f_k^(i) d_k this gives c_j = 1/lambda_j
and, for i < j,

    lambda_i d_i(a_j) + sum_{i<k<j} f_k^(i) d_k(a_j) + c_j f_j^(i) = 0.

a_j is built by integrating these equations from i = j-1 down to i = 1.
Each step fixes the part of a_j that depends on x_i; the part not yet fixed
lives in P_{i-1}, and the last free constant is zero because a_j vanishes
at the origin.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..errors import GeneratorError, SolverError
from .automorphism import Conjugation, TriangularAutomorphism, invert
from .derivation import UniDerivation
from .endomorphism import check_pairwise_commuting, decompose_target, extract_generators
from .filtration import TruncatedLieMap
from .polynomial import Polynomial

logger = logging.getLogger(__name__)


def _solve_tail(targets: Sequence[UniDerivation], scalars: Sequence[Fraction], j: int, c_j: Fraction) -> Polynomial:
    n = targets[0].n
    a = Polynomial.zero(n)
    for i in range(j - 1, 0, -1):
        target = targets[i - 1]
        residual = a.diff(i).scale(scalars[i - 1])
        for k in range(i + 1, j):
            f = target.coefficient(k)
            if f:
                residual = residual + f * a.diff(k)
        residual = -(residual + target.coefficient(j).scale(c_j))
        if residual.max_support_index() > i:
            raise SolverError(
                "integrability",
                f"equation for a_{j} at d'_{i} depends on later variables: {residual}",
            )
        a = a + residual.integrate(i).scale(1 / scalars[i - 1])
    return a


def construct_sigma(targets: Sequence[UniDerivation]) -> TriangularAutomorphism:
    """
    The unique sigma in T^n x T_n with sigma . d_i = targets[i-1].

    Raises:
        SolverError: "integrability" if the targets do not commute,
            "not_realizable" if a target is not lambda_i d_i + u_i with
            lambda_i nonzero, "consistency" if the solved sigma fails the
            final check
    """
    n = len(targets)
    witness = check_pairwise_commuting(targets)
    if witness is not None:
        raise SolverError("integrability", f"[d'_{witness[0]}, d'_{witness[1]}] != 0")
    try:
        decompositions = [decompose_target(t, i) for i, t in enumerate(targets, start=1)]
    except GeneratorError as e:
        raise SolverError("not_realizable", str(e)) from e

    scalars = [d.scalar for d in decompositions]
    scales = [1 / s for s in scalars]
    tails = [Polynomial.zero(n)]
    for j in range(2, n + 1):
        tails.append(_solve_tail(targets, scalars, j, scales[j - 1]))
    sigma = TriangularAutomorphism(n, scales, tails)

    act = Conjugation(sigma)
    for i, target in enumerate(targets, start=1):
        if act(UniDerivation.partial(n, i)) != target:
            raise SolverError("consistency", f"sigma . d{i} != {target}")
    logger.debug("constructed sigma: %s", sigma)
    return sigma


def normalize(phi: TruncatedLieMap) -> Tuple[TriangularAutomorphism, TruncatedLieMap]:
    """
    Replace phi by psi = sigma^{-1} . phi so that psi(d_i) = d_i.

    phi is expected to have passed check_homomorphism; that is not re-run here.

    Returns:
        (sigma, psi)

    Raises:
        GeneratorError: From extract_generators
        SolverError: From construct_sigma
    """
    targets = [d.target() for d in extract_generators(phi)]
    sigma = construct_sigma(targets)
    pull_back = Conjugation(invert(sigma))
    psi = TruncatedLieMap(phi.domain, tuple(pull_back(D) for D in phi.images))
    for i in range(1, phi.n + 1):
        d_i = UniDerivation.partial(phi.n, i)
        if psi.image_of(d_i) != d_i:
            raise SolverError("consistency", f"normalized map moves d{i}")
    return sigma, psi


def generator_targets(phi: TruncatedLieMap) -> List[UniDerivation]:
    """phi(d_1), ..., phi(d_n)."""
    return [phi.image_of(UniDerivation.partial(phi.n, i)) for i in range(1, phi.n + 1)]
