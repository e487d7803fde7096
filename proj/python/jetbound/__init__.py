"""Intersection numbers on Demailly-Semple towers and effective degree thresholds."""

from ._jetbound import (
    ENGINE_VERSION,
    InputError,
    InvariantError,
    Polynomial,
    RelationSet,
    base_chern,
    default_weights,
    degree_threshold,
    evaluate_in_degree,
    integrate_fibers,
    intersect,
    is_admissible,
    leading_degree_coefficient,
    morse_polynomial,
    reduce_monic,
    reduce_tower,
    report,
)

__all__ = [
    "ENGINE_VERSION",
    "InputError",
    "InvariantError",
    "Polynomial",
    "RelationSet",
    "base_chern",
    "default_weights",
    "degree_threshold",
    "evaluate_in_degree",
    "integrate_fibers",
    "intersect",
    "is_admissible",
    "leading_degree_coefficient",
    "morse_polynomial",
    "reduce_monic",
    "reduce_tower",
    "report",
]
