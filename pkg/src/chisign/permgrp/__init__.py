"""Finite permutation group engine (stabilizer chains + element kernels)."""

from .engine import (
    DEFAULT_MAX_ELEMENTS,
    PermGroup,
    Subgroup,
    are_conjugate_subgroups,
    conjugacy_classes,
    gassmann_equivalent,
    group_order,
    has_required_class,
    is_transitive,
    point_stabilizer,
    quotient_is_s3,
    search_candidates,
)
from .kernel import BACKEND
from .perm import Permutation, cycle_type

__all__ = [
    "BACKEND",
    "DEFAULT_MAX_ELEMENTS",
    "PermGroup",
    "Permutation",
    "Subgroup",
    "are_conjugate_subgroups",
    "conjugacy_classes",
    "cycle_type",
    "gassmann_equivalent",
    "group_order",
    "has_required_class",
    "is_transitive",
    "point_stabilizer",
    "quotient_is_s3",
    "search_candidates",
]
