import math

import numpy as np
import pytest

from dkp_magnetic.landau import build_mode, lambda_sq
from dkp_magnetic.oracle import (AccuracyError, RadialGrid, default_grid,
                                 fd_eigenvalues, fd_ground_mode, quad_norm)
from dkp_magnetic.radial import monomial


def test_grid_validation():
    with pytest.raises(ValueError):
        RadialGrid(0.0, 1.0, 10)
    with pytest.raises(ValueError):
        RadialGrid(1.0, 0.5, 10)
    g = RadialGrid.cell_centered(8.0, 100)
    assert g.r_min == pytest.approx(0.04)
    assert len(g.points()) == 100


def test_ground_eigenvalue_m0():
    grid = default_grid(1.0, 2000)
    w = fd_eigenvalues(0, 1.0, grid, 1)
    assert abs(w[0] + 2.0) / 2.0 <= 1e-6


def test_eigenvalue_ladder_negative_m():
    # m = -2 shares the m = 0 tower
    grid = default_grid(1.0, 2000)
    w = fd_eigenvalues(-2, 1.0, grid, 3)
    for n, wn in enumerate(w):
        assert abs(wn + lambda_sq(n, -2, 1.0)) <= 1e-5


def test_eigenvalue_scan_small():
    for B in (0.5, 2.0):
        grid = default_grid(B, 2000)
        for m in (-3, 0, 2):
            w = fd_eigenvalues(m, B, grid, 3)
            for n, wn in enumerate(w):
                exact = -lambda_sq(n, m, B)
                assert abs(wn - exact) / abs(exact) <= 1e-6, (n, m, B)


def test_second_order_convergence():
    # raw (unrefined) error should drop by about 4x when N doubles
    exact = -2.0
    errs = []
    for n in (250, 500, 1000):
        grid = default_grid(1.0, n)
        errs.append(abs(fd_eigenvalues(0, 1.0, grid, 1, refine=False)[0] - exact))
    assert 3.0 < errs[0] / errs[1] < 5.0
    assert 3.0 < errs[1] / errs[2] < 5.0


def test_accuracy_error_on_coarse_grid():
    with pytest.raises(AccuracyError):
        fd_eigenvalues(5, 1.0, default_grid(1.0, 12), 3, converge_tol=1e-6)


def test_ground_mode_matches_symbolic():
    grid = default_grid(1.0, 3000)
    w, r, phi = fd_ground_mode(1, 1.0, grid)
    assert abs(w + 6.0) / 6.0 <= 1e-5
    exact = build_mode(0, 1, 1.0).radial(r).real
    # correlation coefficient of grid vs symbolic profile
    num = np.sum(phi * exact * r)
    corr = abs(num) / np.sqrt(np.sum(phi**2 * r) * np.sum(exact**2 * r))
    assert corr > 0.999999


def test_quad_norm_matches_closed_form():
    grid = default_grid(1.0, 250000)
    # |e^{-x/2}|^2 r dr = 1/2 at B = 1
    assert abs(quad_norm(monomial(1.0, 0), grid) - 0.5) <= 1e-8
    mode = build_mode(2, -1, 1.0)
    assert abs(quad_norm(mode.radial, grid) - 1.0) <= 1e-8
