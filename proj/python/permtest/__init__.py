"""Exact property testers for systems of permutation equations."""

from ._permtest import *  # noqa: F401,F403
from ._permtest import (
    Error,
    InfeasibleError,
    ParseError,
    System,
    Tuple,
    ValidationError,
)

__all__ = [
    "Error",
    "InfeasibleError",
    "ParseError",
    "System",
    "Tuple",
    "ValidationError",
    "cheeger",
    "components",
    "distinguishability",
    "evaluate",
    "flexible_distance",
    "flexible_nearest_solution",
    "hamming",
    "inclusion_probability",
    "is_solution",
    "local_defect",
    "local_distribution",
    "local_tv_distance",
    "lsm",
    "lsm_params",
    "nearest_solution",
    "presets",
    "pullback",
    "sas",
    "sas_reject_probability",
    "solutions",
    "tuple_distance",
    "verify",
]
