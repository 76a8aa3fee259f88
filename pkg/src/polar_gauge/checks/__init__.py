# checks/__init__.py

from .suites import SUITES, SuiteName, require_passed, run_suite

__all__ = ["SUITES", "SuiteName", "require_passed", "run_suite"]
