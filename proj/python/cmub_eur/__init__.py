"""Entropic uncertainty bounds for complete sets of mutually unbiased bases."""

from ._core import (
    Error,
    InvariantViolation,
    ValidationError,
    evaluate_example,
    evaluate_state,
    l_cmubs,
    mubs,
    random_batch,
    random_density,
    sanchez_ruiz_v,
    sweep,
    u_cmubs,
    verify,
    von_neumann_entropy,
)

__all__ = [
    "Error",
    "InvariantViolation",
    "ValidationError",
    "evaluate_example",
    "evaluate_state",
    "l_cmubs",
    "mubs",
    "random_batch",
    "random_density",
    "sanchez_ruiz_v",
    "sweep",
    "u_cmubs",
    "verify",
    "von_neumann_entropy",
]
