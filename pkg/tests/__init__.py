"""."""

import os

SLOW_TESTS: bool = os.environ.get("AKPZ_SLOW_TESTS", "") == "1"
"""Whether the long Monte Carlo tests run."""
