"""Finite quotients G(n) of braid groups, their models, and SO(n) path tools."""

from ._core import (
    Group,
    canonical_form,
    center,
    contract,
    group_order,
    kernel,
    reduce_word,
    run_criterion,
    stall,
    theta,
    verify_models,
)

__all__ = [
    "Group",
    "canonical_form",
    "center",
    "contract",
    "group_order",
    "kernel",
    "reduce_word",
    "run_criterion",
    "stall",
    "theta",
    "verify_models",
]
