"""Exact computations with finite frames, L-fuzzy sets and their fuzzy alpha-cuts."""

from .errors import AlphaCutError
from .fuzzyset import (
    CrispSet,
    FuzzySet,
    PointMap,
    alpha_cut,
    cut_family,
    fs_image,
    fs_intersect,
    fs_leq,
    fs_union,
    fuzzy_alpha_cut,
)
from .lattice import (
    UNIT_INTERVAL,
    Lattice,
    build_lattice,
    check_arrow_properties,
    classify,
    godel_arrow,
    is_frame,
    is_prelinear,
    is_semilinear,
    residuated_impl,
)
from .localic import check_localic_axioms, close_family, is_graded_frame, relation_RL, verify_cut_family

__version__ = "0.1.0"

__all__ = [
    "AlphaCutError",
    "CrispSet",
    "FuzzySet",
    "Lattice",
    "PointMap",
    "UNIT_INTERVAL",
    "alpha_cut",
    "build_lattice",
    "check_arrow_properties",
    "check_localic_axioms",
    "classify",
    "close_family",
    "cut_family",
    "fs_image",
    "fs_intersect",
    "fs_leq",
    "fs_union",
    "fuzzy_alpha_cut",
    "godel_arrow",
    "is_frame",
    "is_graded_frame",
    "is_prelinear",
    "is_semilinear",
    "relation_RL",
    "residuated_impl",
    "verify_cut_family",
]
