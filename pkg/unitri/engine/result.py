"""
Result classes for verification outcomes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..algebra.automorphism import TriangularAutomorphism
from ..algebra.endomorphism import HomomorphismViolation

CERTIFIED = "certified"
REJECTED = "rejected"


@dataclass
class StepResult:
    """Result of a single pipeline step."""

    step_name: str
    passed: bool
    message: str
    details: Dict[str, Any] = field(default_factory=dict)
    duration: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "step": self.step_name,
            "passed": self.passed,
            "message": self.message,
            "details": self.details,
            "duration": round(self.duration, 3),
        }


@dataclass
class VerificationReport:
    """
    Certificate produced by the verification pipeline.

    A certified verdict holds at truncation level `level` only; nothing is
    claimed about extending the map beyond N_level.
    """

    n: int
    level: int
    verdict: str
    reason: str
    failed_step: Optional[str] = None
    lambdas: List[Fraction] = field(default_factory=list)
    sigma: Optional[TriangularAutomorphism] = None
    level_ranks: List[Tuple[int, int, int]] = field(default_factory=list)
    violation: Optional[HomomorphismViolation] = None
    coverage: Tuple[int, int] = (0, 0)
    steps: List[StepResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        passed_count = sum(1 for s in self.steps if s.passed)
        return {
            "n": self.n,
            "level": self.level,
            "verdict": self.verdict,
            "reason": self.reason,
            "failed_step": self.failed_step,
            "lambdas": [str(c) for c in self.lambdas],
            "sigma": self.sigma.to_lines() if self.sigma is not None else None,
            "level_ranks": [{"level": i, "rank": r, "dimension": d} for i, r, d in self.level_ranks],
            "violation": self.violation.to_dict() if self.violation is not None else None,
            "coverage": {"checked_pairs": self.coverage[0], "unchecked_pairs": self.coverage[1]},
            "summary": {
                "total": len(self.steps),
                "passed": passed_count,
                "failed": len(self.steps) - passed_count,
                "duration": round(self.duration, 3),
            },
            "steps": [s.to_dict() for s in self.steps],
        }

    def to_table(self) -> str:
        """Human-readable rendering of to_dict()."""
        data = self.to_dict()
        lines = [f"Verdict: {self.verdict} at level {self.level} (n = {self.n})"]
        lines.append(f"Reason: {self.reason}")
        if self.failed_step:
            lines.append(f"Failed step: {self.failed_step}")
        if self.lambdas:
            lines.append(f"lambda: ({', '.join(data['lambdas'])})")
        if data["sigma"] is not None:
            lines.append("sigma:")
            lines.extend(f"  {line}" for line in data["sigma"])
        if self.violation is not None:
            lines.append(f"Violation: {self.violation}")
        lines.append(
            f"Homomorphism pairs: {self.coverage[0]} checked, {self.coverage[1]} unchecked"
        )
        if self.level_ranks:
            lines.append("")
            lines.append(f"{'level':>5}  {'rank':>6}  {'dim N_i':>7}")
            for i, rank, dim in self.level_ranks:
                lines.append(f"{i:>5}  {rank:>6}  {dim:>7}")
        lines.append("")
        for step in self.steps:
            status = "✓" if step.passed else "✗"
            lines.append(f"{status} {step.step_name:<14} {step.message} ({step.duration:.3f}s)")
        return "\n".join(lines)
