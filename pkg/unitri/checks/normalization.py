"""
Normalization Check - constructs sigma and psi = sigma^{-1} . phi.
"""

from typing import Any, Dict, Tuple

from ..algebra.normalizer import normalize
from ..errors import GeneratorError, SolverError
from .base import BaseCheck


class Check(BaseCheck):
    """sigma construction step."""

    def execute(self, context: Dict[str, Any]) -> Tuple[bool, str, Dict[str, Any]]:
        try:
            sigma, psi = normalize(context["phi"])
        except (GeneratorError, SolverError) as e:
            return False, str(e), {"reason": getattr(e, "reason", None)}

        context["sigma"] = sigma
        context["psi"] = psi
        lines = sigma.to_lines()
        if sigma.is_identity():
            return True, "sigma = identity", {"sigma": lines}
        return True, "sigma constructed; psi fixes every d_i", {"sigma": lines}
