"""
Generators Check - phi(d_i) = lambda_i d_i + u_i with lambda_i nonzero.

Also rejects maps that move some u_{n,i} out of itself. A zero lambda_i is
reported together with the derived lengths that rule it out for a genuine
monomorphism: phi would embed G = K d_i + u_{n,i+1}, of length n - i + 1,
into u_{n,i+1}, of length n - i.
"""

from typing import Any, Dict, Tuple

from ..algebra.endomorphism import check_ideal_preservation, extract_generators
from ..algebra.filtration import derived_length, ideal_length_certificate, subalgebra_g
from ..errors import GeneratorError
from .base import BaseCheck


def _length_argument(n: int, i: int) -> Dict[str, Any]:
    length_g = derived_length(subalgebra_g(n, i, 1), 1)
    length_ideal = ideal_length_certificate(n, i + 1, 1).lower if i < n else 0
    return {
        "length_G": length_g,
        "length_ideal": length_ideal,
        "explanation": (
            f"phi would embed G = K d{i} + u_(n,{i + 1}) with l(G) = {length_g} "
            f"into u_(n,{i + 1}) with l = {length_ideal}"
        ),
    }


class Check(BaseCheck):
    """Generator decomposition check."""

    def execute(self, context: Dict[str, Any]) -> Tuple[bool, str, Dict[str, Any]]:
        phi = context["phi"]

        escape = check_ideal_preservation(phi)
        if escape is not None:
            return False, "derived-series inclusion violated", {"witness": escape.to_dict()}

        try:
            decompositions = extract_generators(phi)
        except GeneratorError as e:
            details: Dict[str, Any] = {"reason": e.reason, "index": e.index}
            if e.reason == "zero_scalar":
                details.update(_length_argument(phi.n, e.index))
            return False, str(e), details

        context["decompositions"] = decompositions
        lambdas = [str(d.scalar) for d in decompositions]
        return True, f"lambda = ({', '.join(lambdas)})", {"lambdas": lambdas}
