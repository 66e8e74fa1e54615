"""
Homomorphism Check - the bracket law on the truncated domain.

Only pairs of basis elements whose levels add up to at most the domain
level are checked; their bracket is the only one phi is defined on.
"""

from typing import Any, Dict, Tuple

from ..algebra.endomorphism import check_homomorphism, homomorphism_coverage
from .base import BaseCheck


class Check(BaseCheck):
    """Bracket law check."""

    def execute(self, context: Dict[str, Any]) -> Tuple[bool, str, Dict[str, Any]]:
        phi = context["phi"]
        checked, unchecked = homomorphism_coverage(phi)
        context["coverage"] = (checked, unchecked)
        details: Dict[str, Any] = {"checked_pairs": checked, "unchecked_pairs": unchecked}

        violation = check_homomorphism(phi)
        if violation is not None:
            context["violation"] = violation
            details["violation"] = violation.to_dict()
            return False, f"homomorphism law violated: {violation}", details

        return True, f"Bracket law holds on {checked} basis pairs", details
