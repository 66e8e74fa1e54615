"""
Verification runner - orchestrates check execution and report assembly.

This module is the main orchestrator that:
1. Runs each pipeline step in order on a shared context
2. Stops at the first failing step
3. Assembles a VerificationReport from the context
"""

import importlib
import logging
import time
from typing import Any, Dict, List, Optional

from ..algebra.filtration import TruncatedLieMap
from .result import CERTIFIED, REJECTED, StepResult, VerificationReport

logger = logging.getLogger(__name__)


class VerificationRunner:
    """
    Runner for the monomorphism verification pipeline.

    Flow:
    1. homomorphism - bracket law on every pair inside the domain
    2. injectivity - trivial kernel on N_d
    3. generators - phi(d_i) = lambda_i d_i + u_i, lambda_i != 0
    4. normalization - sigma with sigma . d_i = phi(d_i), psi = sigma^{-1} . phi
    5. levels - psi bijective on N_0..N_budget
    """

    STEPS = ("homomorphism", "injectivity", "generators", "normalization", "levels")

    def __init__(self, verbose: bool = False, config: Optional[Dict[str, Dict[str, Any]]] = None):
        """
        Initialize the verification runner.

        Args:
            verbose: Enable verbose output
            config: Per-step configuration, keyed by step name
        """
        self.verbose = verbose
        self.config = config or {}

    def run(self, phi: TruncatedLieMap) -> VerificationReport:
        """
        Run every enabled step against phi.

        Args:
            phi: Map to verify

        Returns:
            The verification report; rejections are verdicts, not exceptions
        """
        start_time = time.time()

        if self.verbose:
            print("\n" + "=" * 60)
            print(f"Verifying endomorphism of u_{phi.n} on N_{phi.level}")
            print("=" * 60 + "\n")

        context: Dict[str, Any] = {"phi": phi}
        step_results: List[StepResult] = []

        for step_name in self.STEPS:
            step_config = self.config.get(step_name, {})
            if not step_config.get("enabled", True):
                if self.verbose:
                    print(f"[SKIP] {step_name} (disabled)")
                continue

            if self.verbose:
                print(f"\n[STEP] {step_name}")
                print("-" * 40)

            result = self._run_step(step_name, step_config, context)
            step_results.append(result)

            if self.verbose:
                status = "✓ PASSED" if result.passed else "✗ FAILED"
                print(f"  Result: {status}")
                print(f"  Message: {result.message}")

            if not result.passed:
                break

        report = self._assemble(phi, context, step_results, time.time() - start_time)

        if self.verbose:
            print("\n" + "=" * 60)
            print(f"Verification Complete ({report.duration:.2f}s): {report.verdict}")
            print("=" * 60 + "\n")

        return report

    def _assemble(
        self,
        phi: TruncatedLieMap,
        context: Dict[str, Any],
        step_results: List[StepResult],
        duration: float,
    ) -> VerificationReport:
        failed = next((r for r in step_results if not r.passed), None)
        decompositions = context.get("decompositions", [])
        return VerificationReport(
            n=phi.n,
            level=phi.level,
            verdict=REJECTED if failed else CERTIFIED,
            reason=failed.message if failed else "certified automorphism at truncation level",
            failed_step=failed.step_name if failed else None,
            lambdas=[d.scalar for d in decompositions],
            sigma=context.get("sigma"),
            level_ranks=list(context.get("level_ranks", [])),
            violation=context.get("violation"),
            coverage=context.get("coverage", (0, 0)),
            steps=step_results,
            duration=duration,
        )

    def _run_step(self, step_name: str, step_config: Dict[str, Any], context: Dict[str, Any]) -> StepResult:
        """
        Run a single step.

        Any exception escaping the check becomes a failed step.
        """
        start_time = time.time()

        try:
            module = self._load_check_module(step_name)
            check = module.Check(step_config)
            passed, message, details = check.execute(context)
            return StepResult(
                step_name=step_name,
                passed=passed,
                message=message,
                details=details,
                duration=time.time() - start_time,
            )
        except Exception as e:
            logger.debug("step %s raised", step_name, exc_info=True)
            return StepResult(
                step_name=step_name,
                passed=False,
                message=f"Step execution failed: {e}",
                details={"error": str(e)},
                duration=time.time() - start_time,
            )

    def _load_check_module(self, step_name: str):
        """
        Load a check module dynamically.

        Args:
            step_name: Name of the step (e.g., 'homomorphism', 'levels')

        Returns:
            Loaded module with a Check class
        """
        module_name = step_name.replace("-", "_")
        module_path = f"unitri.checks.{module_name}"

        try:
            return importlib.import_module(module_path)
        except ImportError as e:
            raise ImportError(f"Check '{step_name}' not found at {module_path}: {e}")


def verify_theorem(phi: TruncatedLieMap, budget: Optional[int] = None, verbose: bool = False) -> VerificationReport:
    """
    Run the full pipeline on phi.

    Args:
        phi: Map to verify
        budget: Highest level i for which psi must be bijective on N_i;
            defaults to level // 2, the largest level whose pairs were all
            checked by the bracket law

    Raises:
        ValueError: If budget is outside 0..level
    """
    if budget is not None and not 0 <= budget <= phi.level:
        raise ValueError(f"Budget {budget} outside 0..{phi.level}")
    config = {"levels": {"budget": budget}} if budget is not None else {}
    return VerificationRunner(verbose=verbose, config=config).run(phi)
