"""Evaluation codes on rational ruled surfaces and CSS codes built from them."""

from .gf import Field, field_new, field_of_size
from .codes import LinearCode, coset_min_weight, min_weight_outside
from .rs import rs_code, prs_code, rm_code, rm_min_distance
from .hirzebruch import (
    HirzebruchParams,
    code_projective,
    code_projective_explicit,
    code_affine,
    code_affine_explicit,
    dual_affine_explicit,
    dual_projective_explicit,
    dim_formula,
    affine_dim_formula,
    min_distance_formula,
    affine_min_distance_formula,
    kernel_dims,
    dual_distance_bounds,
    ample_dual_distance,
)
from .equivalence import Multiplier, find_multiplier, twist_dual, nested_pair, orthogonal_pair
from .css import CssCode, css_from_pair, css_injective, css_max, css_injective_simplified, css_orthogonal
from . import errors, verify

__version__ = "0.1.0"

__all__ = [
    "Field",
    "field_new",
    "field_of_size",
    "LinearCode",
    "coset_min_weight",
    "min_weight_outside",
    "rs_code",
    "prs_code",
    "rm_code",
    "rm_min_distance",
    "HirzebruchParams",
    "code_projective",
    "code_projective_explicit",
    "code_affine",
    "code_affine_explicit",
    "dual_affine_explicit",
    "dual_projective_explicit",
    "dim_formula",
    "affine_dim_formula",
    "min_distance_formula",
    "affine_min_distance_formula",
    "kernel_dims",
    "dual_distance_bounds",
    "ample_dual_distance",
    "Multiplier",
    "find_multiplier",
    "twist_dual",
    "nested_pair",
    "orthogonal_pair",
    "CssCode",
    "css_from_pair",
    "css_injective",
    "css_max",
    "css_injective_simplified",
    "css_orthogonal",
    "errors",
    "verify",
]
