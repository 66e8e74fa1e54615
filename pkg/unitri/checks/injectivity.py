"""
Injectivity Check - exact rank of phi on its whole domain.
"""

from typing import Any, Dict, Tuple

from ..algebra.filtration import dimension, images_rank
from .base import BaseCheck


class Check(BaseCheck):
    """Trivial-kernel check at the top level."""

    def execute(self, context: Dict[str, Any]) -> Tuple[bool, str, Dict[str, Any]]:
        phi = context["phi"]
        rank = images_rank(phi.images)
        dim = dimension(phi.n, phi.level)
        details = {"rank": rank, "dimension": dim}
        if rank != dim:
            return False, "not a monomorphism", details
        return True, f"Injective on N_{phi.level} (rank {rank})", details
