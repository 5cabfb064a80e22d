"""Garside monoids with parabolic submonoids, ribbons and standardizers."""

from __future__ import annotations

from .errors import GarsideError
from .groups import (
    GroupFraction,
    ParabolicSubgroup,
    conjugate_parabolics,
    group_conjugate,
    group_inverse,
    group_multiply,
    is_standard_subgroup,
    minimal_standardizer,
    z_element,
    z_of,
)
from .lattice import SimpleLattice, validate_garside
from .monoid import Element, GarsideMonoid
from .parabolic import (
    StandardParabolic,
    all_parabolics,
    head_P,
    parabolic_closure,
    smallest_parabolic_containing,
    tail_P,
)
from .presentations import build_artin, build_dual, build_from_spec, load_spec
from .ribbon import Ribbon, is_ribbon, make_ribbon, ribbon_category_graph, ribbon_prefix, v_s_P

__all__ = [
    "Element", "GarsideError", "GarsideMonoid", "GroupFraction", "ParabolicSubgroup", "Ribbon",
    "SimpleLattice", "StandardParabolic", "all_parabolics", "build_artin", "build_dual",
    "build_from_spec", "conjugate_parabolics", "group_conjugate", "group_inverse",
    "group_multiply", "head_P", "is_ribbon", "is_standard_subgroup", "load_spec",
    "make_ribbon", "minimal_standardizer", "parabolic_closure", "ribbon_category_graph",
    "ribbon_prefix", "smallest_parabolic_containing", "tail_P", "v_s_P", "validate_garside",
    "z_element", "z_of",
]
