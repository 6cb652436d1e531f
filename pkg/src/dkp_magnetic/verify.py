"""Self-verification suites: matrix algebra, operator identities, the
finite-difference eigenvalue oracle and full-system residuals. Used by
the command-line `verify` command and by the acceptance tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import algebra
from .landau import build_mode, lambda_sq
from .oracle import default_grid, fd_eigenvalues
from .radial import GaussPoly, apply_a, apply_b, apply_delta_explicit
from .spectrum import Branch, energy
from .wavefunction import (build_branch_state, build_scalar_class, perturbed,
                           residual, verify_second_order)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def matrix_algebra_suite() -> list[CheckResult]:
    out = []
    j12 = algebra.build_J12()
    ok = np.max(np.abs(j12 + 1j * algebra.build_S3())) <= 1e-14
    out.append(CheckResult("algebra", "J12 = -i S3", bool(ok)))
    bad = [t for t in itertools.product(range(4), repeat=3)
           if not algebra.verify_trilinear(*t)]
    out.append(CheckResult("algebra", "trilinear relation (64 triples)",
                           not bad, detail=f"failing: {bad}" if bad else ""))
    eigs = np.sort(np.linalg.eigvals(1j * j12).real)
    expect = np.array([-1.0] * 3 + [0.0] * 4 + [1.0] * 3)
    out.append(CheckResult("algebra", "i J12 eigenvalues {-1,0,+1}x{3,4,3}",
                           bool(np.allclose(eigs, expect, atol=1e-12))))
    return out


def random_gauss_poly(rng: random.Random, B: float, max_degree: int = 8,
                      min_power: int = 2) -> GaussPoly:
    coeffs = {}
    for j in range(min_power, min_power + max_degree + 1):
        coeffs[j] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return GaussPoly(B, coeffs)


def operator_identity_suite(seed: int = 20240815,
                            samples: int = 100) -> list[CheckResult]:
    """Both bilinear ladder identities, on random inputs per m in [-4, 4].

    Inputs start at half-power 6 so every intermediate stays regular for
    all tested m.
    """
    rng = random.Random(seed)
    worst_sum = worst_diff = 0.0
    for m in range(-4, 5):
        for _ in range(samples):
            f = random_gauss_poly(rng, B=rng.choice([0.5, 1.0, 2.0]),
                                  min_power=6)
            scale = f.max_abs_coeff()
            ba = apply_b(m - 1, apply_a(m, f))
            ab = apply_a(m + 1, apply_b(m, f))
            lam = 2.0 * f.B
            # -b a + a b = 2B f
            diff = (-1.0) * ba + ab - lam * f
            worst_diff = max(worst_diff, diff.max_abs_coeff() / (lam * scale))
            # -b a - a b = Delta f, with Delta applied via the explicit
            # second-derivative route
            alt = (-1.0) * ba - ab - apply_delta_explicit(m, f)
            ref = max(apply_delta_explicit(m, f).max_abs_coeff(), scale)
            worst_sum = max(worst_sum, alt.max_abs_coeff() / ref)
    out = [
        CheckResult("operators", "-b_{m-1} a_m + a_{m+1} b_m = 2B",
                    worst_diff <= 1e-12, f"worst {worst_diff:.2e}"),
        CheckResult("operators", "-b_{m-1} a_m - a_{m+1} b_m = Delta",
                    worst_sum <= 1e-12, f"worst {worst_sum:.2e}"),
    ]
    return out


def eigenvalue_oracle_suite(n_max: int = 5, m_max: int = 5,
                            b_values=(0.5, 1.0, 2.0), n_points: int = 4000,
                            rel_tol: float = 1e-6) -> list[CheckResult]:
    worst = 0.0
    worst_case = None
    for B in b_values:
        grid = default_grid(B, n_points)
        for m in range(-m_max, m_max + 1):
            eigs = fd_eigenvalues(m, B, grid, n_max + 1)
            for n in range(n_max + 1):
                exact = -lambda_sq(n, m, B)
                rel = abs(eigs[n] - exact) / abs(exact)
                if rel > worst:
                    worst, worst_case = rel, (n, m, B)
    return [CheckResult(
        "oracle", "FD eigenvalues match 4B(n + 1/2 + (|m|+m)/2)",
        worst <= rel_tol, f"worst rel {worst:.2e} at (n,m,B)={worst_case}")]


def _all_states(n_max=4, m_max=3, k_values=(0.0, 0.7),
                b_values=(0.5, 1.0), m_values=(1.0, 2.0)):
    for n in range(n_max + 1):
        for m in range(-m_max, m_max + 1):
            for k in k_values:
                for B in b_values:
                    for M in m_values:
                        yield build_scalar_class(n, m, k, B, M)
                        yield build_branch_state("A", n, m, k, B, M)
                        if not (n == 0 and m == 0):
                            # no normalizable -B state exists at n=0, m=0
                            yield build_branch_state("B", n, m, k, B, M)


def residual_suite(perturb: bool = False, tol: float = 1e-10) -> list[CheckResult]:
    worst1 = worst2 = 0.0
    count = 0
    for state in _all_states():
        worst1 = max(worst1, residual(state))
        worst2 = max(worst2, verify_second_order(state))
        count += 1
    out = [
        CheckResult("residual", f"first-order system on {count} states",
                    worst1 <= tol, f"worst {worst1:.2e}"),
        CheckResult("residual", f"second-order system on {count} states",
                    worst2 <= tol, f"worst {worst2:.2e}"),
    ]
    probe = residual(perturbed(build_scalar_class(0, 0, 1.0, 1.0, 1.0)))
    out.append(CheckResult("residual", "perturbation probe detects 1% defect",
                           probe > 1e-4, f"probe residual {probe:.2e}"))
    if perturb:
        # test hook: report the perturbed state as a failure
        out.append(CheckResult("residual", "injected perturbation", False,
                               f"residual {probe:.2e}"))
    return out


def spectrum_suite() -> list[CheckResult]:
    worst_order = True
    for n in range(6):
        for m in range(-5, 6):
            for B in (0.5, 1.0, 2.0):
                for M in (1.0, 2.0):
                    es = [energy(b, n, m, 0.4, B, M).epsilon
                          for b in (Branch.MINUS_B, Branch.SCALAR, Branch.PLUS_B)]
                    if not es[0] < es[1] < es[2]:
                        worst_order = False
    anchors = [energy(Branch.MINUS_B, 0, 0, 0, 1, 1).epsilon,
               energy(Branch.SCALAR, 0, 0, 0, 1, 1).epsilon,
               energy(Branch.PLUS_B, 0, 0, 0, 1, 1).epsilon]
    ok_anchor = (abs(anchors[0] - 1) < 1e-12
                 and abs(anchors[1] - 3 ** 0.5) < 1e-12
                 and abs(anchors[2] - 3) < 1e-12)
    return [
        CheckResult("spectrum", "branch ordering MINUS_B < SCALAR < PLUS_B",
                    worst_order),
        CheckResult("spectrum", "anchor energies (1, sqrt(3), 3)", ok_anchor,
                    f"got {anchors}"),
    ]


def run_all(quick: bool = False, perturb: bool = False) -> list[CheckResult]:
    results = []
    results += matrix_algebra_suite()
    results += operator_identity_suite()
    results += spectrum_suite()
    if not quick:
        results += eigenvalue_oracle_suite()
    results += residual_suite(perturb=perturb)
    return results
