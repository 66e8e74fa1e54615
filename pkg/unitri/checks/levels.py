"""
Levels Check - psi(N_i) = N_i for i = 0..budget.

psi fixes every d_i, so it preserves each N_i; with full rank there it is
a bijection of N_i.
"""

from typing import Any, Dict, List, Tuple

from ..algebra.filtration import dimension, rank_of
from ..errors import FiltrationNotPreservedError
from .base import BaseCheck


class Check(BaseCheck):
    """Per-level rank check."""

    def __init__(self, config: Dict[str, Any]):
        """Initialize the levels check."""
        super().__init__(config)
        self.budget = config.get("budget")

    def execute(self, context: Dict[str, Any]) -> Tuple[bool, str, Dict[str, Any]]:
        psi = context["psi"]
        budget = self.budget if self.budget is not None else psi.level // 2
        if not 0 <= budget <= psi.level:
            return False, f"budget {budget} outside 0..{psi.level}", {"budget": budget}

        table: List[Tuple[int, int, int]] = []
        context["level_ranks"] = table
        for i in range(budget + 1):
            try:
                rank = rank_of(psi, i)
            except FiltrationNotPreservedError as e:
                return False, str(e), {"budget": budget, "level": i, "witness": str(e.witness)}
            dim = dimension(psi.n, i)
            table.append((i, rank, dim))
            if rank != dim:
                return False, f"rank {rank} < dim N_{i} = {dim}", {"budget": budget, "level": i}

        return True, f"psi is bijective on N_0..N_{budget}", {"budget": budget, "levels": len(table)}
