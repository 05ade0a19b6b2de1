"""Groebner bases for ideals and submodules of free modules."""

from .basis import (GroebnerBasis, SyzygyResult, contains, eliminate, groebner, kernel_of_map, lift,
                    normal_form, s_vector_residues, syzygies)
from .limits import Limits, ResourceLimitError, current_limits, resource_limits

__all__ = [
    "GroebnerBasis", "SyzygyResult", "contains", "eliminate", "groebner", "kernel_of_map", "lift",
    "normal_form", "s_vector_residues", "syzygies", "Limits", "ResourceLimitError", "current_limits",
    "resource_limits",
]
