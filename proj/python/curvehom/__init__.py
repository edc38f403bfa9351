"""Exact homological invariants of nodal and cuspidal curves."""

from ._core import (
    InputError,
    degeneration_page,
    hochschild,
    local_cohomology,
    negative_cyclic,
    run_cli,
    verify,
)

__all__ = [
    "InputError",
    "degeneration_page",
    "hochschild",
    "local_cohomology",
    "negative_cyclic",
    "run_cli",
    "verify",
]
