"""Finite-instance workbench for nerves of maximal simplices, coset
intersection complexes and curve-complex combinatorics."""

from .complex_core import Complex, build_complex, is_simplex, maximal_simplices, skeleton
from .nerve_ops import (beta_map, check_conditions, max_simplex_witness, nerve_of_cover,
                        nerve_of_maximal, sigma, sigma_tau_intersection)

__all__ = [
    "Complex", "build_complex", "is_simplex", "maximal_simplices", "skeleton",
    "beta_map", "check_conditions", "max_simplex_witness", "nerve_of_cover",
    "nerve_of_maximal", "sigma", "sigma_tau_intersection",
]
__version__ = "0.1.0"
