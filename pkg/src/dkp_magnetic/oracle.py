"""Independent numerical checks: finite-difference eigensolver for the
radial operator

    Delta_m = d^2/dr^2 + (1/r) d/dr - (m + B r^2)^2 / r^2

and grid quadrature for norms. Nothing here touches the symbolic path.

The discretization is the conservative second-order central-difference
scheme for (1/r) d/dr (r d/dr) on a uniform cell-centered grid
(r_i = (i + 1/2) h, so r_min = h/2 > 0), made symmetric by the sqrt(r)
similarity scaling of the unknowns. The flux through r = 0 vanishes by
construction and a Dirichlet wall sits at r_max. Each solve is run at N
and 2N points; the pair detects non-convergence and supplies one
Richardson step, which removes the leading O(h^2) defect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .radial import GaussPoly


class AccuracyError(RuntimeError):
    """Grid too coarse: eigenvalues at N and 2N disagree beyond tolerance."""


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    n_points: int

    def __post_init__(self):
        if self.r_min <= 0:
            raise ValueError("r_min must be > 0")
        if self.r_max <= self.r_min or self.n_points < 2:
            raise ValueError("invalid grid")

    def points(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.n_points)

    @classmethod
    def cell_centered(cls, r_max: float, n_points: int) -> "RadialGrid":
        h = r_max / n_points
        return cls(r_min=h / 2.0, r_max=r_max, n_points=n_points)


def default_grid(B: float, n_points: int = 4000, x_max: float = 64.0) -> RadialGrid:
    """Grid covering x = B r^2 up to x_max (>= 8 Gaussian widths)."""
    return RadialGrid.cell_centered(math.sqrt(x_max / B), n_points)


def _tridiagonal(m: int, B: float, r_max: float, n: int):
    h = r_max / n
    r = (np.arange(n) + 0.5) * h
    diag = -2.0 / h**2 - (m + B * r**2) ** 2 / r**2
    off = (r[:-1] + h / 2.0) / (h**2 * np.sqrt(r[:-1] * r[1:]))
    return r, diag, off


def _raw_eigenvalues(m, B, r_max, n, count):
    _, diag, off = _tridiagonal(m, B, r_max, n)
    w = eigh_tridiagonal(diag, off, select="i",
                         select_range=(n - count, n - 1))[0]
    return w[::-1]  # largest (least negative) first


def fd_eigenvalues(m: int, B: float, grid: RadialGrid, count: int,
                   refine: bool = True, converge_tol: float = 1e-3) -> list[float]:
    """The `count` largest eigenvalues of the discretized Delta_m (all
    negative), ordered decreasingly in magnitude of accuracy interest
    (ground level first).

    With refine=True the N / 2N pair is Richardson-extrapolated; the
    same pair flags a too-coarse grid via AccuracyError.
    """
    if B <= 0:
        raise ValueError("B must be > 0")
    n = grid.n_points
    w1 = _raw_eigenvalues(m, B, grid.r_max, n, count)
    if not refine:
        return list(w1)
    w2 = _raw_eigenvalues(m, B, grid.r_max, 2 * n, count)
    drift = np.max(np.abs(w2 - w1) / np.abs(w2))
    if drift > converge_tol:
        raise AccuracyError(
            f"eigenvalues moved by {drift:.2e} between N={n} and N={2*n}")
    return list((4.0 * w2 - w1) / 3.0)


def fd_ground_mode(m: int, B: float, grid: RadialGrid):
    """Ground eigenpair of the discretized Delta_m: (eigenvalue, r, phi)."""
    n = grid.n_points
    r, diag, off = _tridiagonal(m, B, grid.r_max, n)
    w, v = eigh_tridiagonal(diag, off, select="i", select_range=(n - 1, n - 1))
    phi = v[:, 0] / np.sqrt(r)
    return float(w[0]), r, phi


def quad_norm(f: GaussPoly, grid: RadialGrid) -> float:
    """Trapezoidal integral of |f|^2 r dr on the grid."""
    r = grid.points()
    vals = np.abs(f(r)) ** 2 * r
    return float(np.trapezoid(vals, r))
