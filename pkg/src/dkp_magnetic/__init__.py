"""Exact solutions for a spin-1 particle in a homogeneous magnetic field,
built in the 10-dimensional Duffin-Kemmer-Petiau formalism, with an
independent finite-difference oracle."""

from .algebra import build_beta, build_J12, build_S3, verify_trilinear
from .landau import LandauMode, build_mode, lambda_sq
from .oracle import RadialGrid, default_grid, fd_eigenvalues, quad_norm
from .radial import (GaussPoly, NegativeHalfPowerError, apply_a, apply_b,
                     apply_delta, norm_squared)
from .spectrum import (Branch, CouplingMatrix, DegenerateParameterError,
                       Level, diagonalize_coupling, energy, enumerate_levels)
from .wavefunction import (TenComponentState, build_branch_state,
                           build_scalar_class, residual, verify_second_order)

__all__ = [
    "build_beta", "build_J12", "build_S3", "verify_trilinear",
    "LandauMode", "build_mode", "lambda_sq",
    "RadialGrid", "default_grid", "fd_eigenvalues", "quad_norm",
    "GaussPoly", "NegativeHalfPowerError", "apply_a", "apply_b",
    "apply_delta", "norm_squared",
    "Branch", "CouplingMatrix", "DegenerateParameterError", "Level",
    "diagonalize_coupling", "energy", "enumerate_levels",
    "TenComponentState", "build_branch_state", "build_scalar_class",
    "residual", "verify_second_order",
]

__version__ = "0.1.0"
