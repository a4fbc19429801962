"""Exact classification of quadratic rational maps on P^1 up to conjugacy over Q or F_p."""

from .exactnum import GF, QQ, Mod, QuadExt, cube_root_norm_one, squarefree_part
from .moduli import AutClass, ModuliPoint, aut_class, sigma_invariants, symmetry_locus_value
from .normalform import (
    C2Form,
    S3General,
    S3RationalCycle,
    TrivialAut,
    are_conjugate,
    classify,
    phi_kb,
    theta_dk,
    theta_t,
)
from .parser import ParseError, format_map, parse_map
from .ratmap import INF, Moebius, RationalMap, conjugate, fixed_point_data, second_dynatomic

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "Mod",
    "QuadExt",
    "cube_root_norm_one",
    "squarefree_part",
    "AutClass",
    "ModuliPoint",
    "aut_class",
    "sigma_invariants",
    "symmetry_locus_value",
    "C2Form",
    "S3General",
    "S3RationalCycle",
    "TrivialAut",
    "are_conjugate",
    "classify",
    "phi_kb",
    "theta_dk",
    "theta_t",
    "ParseError",
    "format_map",
    "parse_map",
    "INF",
    "Moebius",
    "RationalMap",
    "conjugate",
    "fixed_point_data",
    "second_dynatomic",
]
