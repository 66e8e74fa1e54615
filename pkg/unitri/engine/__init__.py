"""
Engine module - verification pipeline runner and report.
"""

from .runner import VerificationRunner, verify_theorem
from .result import StepResult, VerificationReport

__all__ = ["VerificationRunner", "verify_theorem", "StepResult", "VerificationReport"]
