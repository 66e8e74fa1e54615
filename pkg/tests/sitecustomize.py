"""Test-time sitecustomize.

Python imports `sitecustomize` on startup when it is importable, so with
`tests/` on PYTHONPATH this starts coverage in the CLI subprocesses that
test_big_end_to_end.py spawns.
"""

from __future__ import annotations

import os

if os.environ.get("COVERAGE_PROCESS_START"):
    try:
        import coverage
    except ImportError:
        coverage = None  # type: ignore[assignment]
    if coverage is not None:
        coverage.process_startup()
