"""
Base check class for all verification pipeline steps.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple


class BaseCheck(ABC):
    """Base class for all pipeline checks."""

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize the check.

        Args:
            config: Step configuration passed to the runner
        """
        self.config = config
        self.enabled = config.get("enabled", True)

    @abstractmethod
    def execute(self, context: Dict[str, Any]) -> Tuple[bool, str, Dict[str, Any]]:
        """
        Execute the check.

        Args:
            context: Pipeline state; holds "phi" and whatever earlier
                steps stored for later ones

        Returns:
            Tuple of (passed, message, details)
            - passed: Whether the check passed
            - message: Human-readable message
            - details: Additional details about the evaluation
        """
        pass

    def get_name(self) -> str:
        """Get the check name."""
        return self.__class__.__name__
