"""Assembly of full ten-component radial solutions and their verification
against the first-order radial system.

The ten equations, with a_m, b_m the ladder operators and (Phi_0, Phi,
E, H) the 1-3-3-3 component blocks, are

    -b_{m-1} E1 - a_{m+1} E3 - i k E2            = M Phi_0
    -i b_{m-1} H1 + i a_{m+1} H3 + i eps E2      = M Phi_2
    i a_m H2 + i eps E1 - k H1                   = M Phi_1
    -i b_m H2 + i eps E3 + k H3                  = M Phi_3
    a_m Phi_0 - i eps Phi_1                      = M E1
    -i a_m Phi_2 + k Phi_1                       = M H1
    b_m Phi_0 - i eps Phi_3                      = M E3
    i b_m Phi_2 - k Phi_3                        = M H3
    -i eps Phi_2 - i k Phi_0                     = M E2
    i b_{m-1} Phi_1 - i a_{m+1} Phi_3            = M H2

Three classes of solutions are built here: the scalar-like class
(Phi_1 = Phi_3 = 0) and the two branch classes obtained by
diagonalizing the (g, G) coupling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np

from .landau import build_mode
from .radial import (GaussPoly, apply_a, apply_b, a_monomial_terms,
                     b_monomial_terms, norm_squared)
from .spectrum import Branch, DegenerateParameterError, diagonalize_coupling, energy

COMPONENT_NAMES = ("phi0", "phi1", "phi2", "phi3",
                   "e1", "e2", "e3", "h1", "h2", "h3")


class ReconstructionError(RuntimeError):
    """Coefficient matching for a first-order inversion failed."""


@dataclass(frozen=True)
class TenComponentState:
    """Full radial ten-component solution with its quantum numbers."""

    phi0: GaussPoly
    phi1: GaussPoly
    phi2: GaussPoly
    phi3: GaussPoly
    e1: GaussPoly
    e2: GaussPoly
    e3: GaussPoly
    h1: GaussPoly
    h2: GaussPoly
    h3: GaussPoly
    epsilon: float
    k: float
    m: int
    M: float
    branch: Branch

    def components(self) -> dict[str, GaussPoly]:
        return {name: getattr(self, name) for name in COMPONENT_NAMES}

    @property
    def B(self) -> float:
        return self.phi0.B

    def to_json(self) -> str:
        obj = {
            "branch": self.branch.value, "m": self.m,
            "epsilon": self.epsilon, "k": self.k, "B": self.B, "M": self.M,
        }
        for name, comp in self.components().items():
            obj[name] = json.loads(comp.to_json())
        return json.dumps(obj, indent=2)

    def sample_csv(self, r_values) -> str:
        """CSV rows r, then re/im of all ten components on the given grid."""
        header = ["r"]
        for name in COMPONENT_NAMES:
            header += [f"{name}_re", f"{name}_im"]
        lines = [",".join(header)]
        values = {name: comp(np.asarray(r_values))
                  for name, comp in self.components().items()}
        for i, r in enumerate(r_values):
            row = [format(float(r), ".9g")]
            for name in COMPONENT_NAMES:
                z = values[name][i]
                row += [format(z.real, ".9g"), format(z.imag, ".9g")]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScalarQuadruple:
    """The reduced amplitudes F = k Phi_0 + eps Phi_2, G = eps Phi_0 + k Phi_2
    and f = Z1 + Z3, g = Z1 - Z3 with Z1 = b_{m-1} Phi_1, Z3 = a_{m+1} Phi_3."""

    F: GaussPoly
    G: GaussPoly
    f: GaussPoly
    g: GaussPoly


def scalar_quadruple(state: TenComponentState) -> ScalarQuadruple:
    m = state.m
    F = state.k * state.phi0 + state.epsilon * state.phi2
    G = state.epsilon * state.phi0 + state.k * state.phi2
    Z1 = apply_b(m - 1, state.phi1)
    Z3 = apply_a(m + 1, state.phi3)
    return ScalarQuadruple(F=F, G=G, f=Z1 + Z3, g=Z1 - Z3)


# -- construction helpers ----------------------------------------------

def _zero(B: float) -> GaussPoly:
    return GaussPoly(B, {})


def _terms_to_dict(rule, m: int, coeffs: dict[int, complex],
                   scale: float) -> dict[int, complex]:
    out: dict[int, complex] = {}
    for nu, c in coeffs.items():
        for j, w in rule(m, nu):
            if w != 0.0:
                out[j] = out.get(j, 0.0) + scale * w * c
    return out


def solve_phi13(m: int, eps: float, k: float, M: float, G: GaussPoly,
                Z1: GaussPoly, Z3: GaussPoly,
                tol: float = 1e-9) -> tuple[GaussPoly, GaussPoly]:
    """Recover (Phi_1, Phi_3) from the reduced amplitudes.

    Solves the joint linear system

        b_{m-1} Phi_1 = Z1,   a_{m+1} Phi_3 = Z3,
        (-a_m b_{m-1} + C) Phi_1 + a_m a_{m+1} Phi_3 + i a_m G = 0,
        b_m b_{m-1} Phi_1 + (-b_m a_{m+1} + C) Phi_3 + i b_m G = 0,

    with C = eps^2 - k^2 - M^2, by coefficient matching over the monomial
    basis. The two second-order rows are required because a_{m+1} has a
    one-dimensional in-class kernel for m <= -1, so the first-order rows
    alone do not pin Phi_3. Powers below zero are constrained to vanish,
    which keeps the solution regular at the origin. Raises
    ReconstructionError when no in-class solution exists.
    """
    B = G.B
    s = math.sqrt(B / 2.0)
    C = eps * eps - k * k - M * M
    hi = 1 + max([2] + [f.highest_power() for f in (G, Z1, Z3)
                        if not f.is_zero()])
    cand = list(range(hi + 2))
    n_c = len(cand)
    row_powers = list(range(-3, hi + 5))
    n_r = len(row_powers)
    ridx = {p: i for i, p in enumerate(row_powers)}

    A = np.zeros((4 * n_r, 2 * n_c), dtype=complex)
    rhs = np.zeros(4 * n_r, dtype=complex)

    def add(eq: int, d: dict[int, complex], col: int | None):
        for p, c in d.items():
            if col is None:
                rhs[eq * n_r + ridx[p]] -= c  # moved to the right-hand side
            else:
                A[eq * n_r + ridx[p], col] += c

    for i, nu in enumerate(cand):
        one = {nu: 1.0 + 0j}
        b1 = _terms_to_dict(b_monomial_terms, m - 1, one, s)
        a3 = _terms_to_dict(a_monomial_terms, m + 1, one, s)
        add(0, b1, i)
        add(1, a3, n_c + i)
        ab1 = _terms_to_dict(a_monomial_terms, m, b1, s)
        add(2, {p: -c for p, c in ab1.items()}, i)
        add(2, {nu: C}, i)
        aa3 = _terms_to_dict(a_monomial_terms, m, a3, s)
        add(2, aa3, n_c + i)
        bb1 = _terms_to_dict(b_monomial_terms, m, b1, s)
        add(3, bb1, i)
        ba3 = _terms_to_dict(b_monomial_terms, m, a3, s)
        add(3, {p: -c for p, c in ba3.items()}, n_c + i)
        add(3, {nu: C}, n_c + i)

    add(0, {p: -c for p, c in Z1.coeffs.items()}, None)
    add(1, {p: -c for p, c in Z3.coeffs.items()}, None)
    aG = _terms_to_dict(a_monomial_terms, m, G.coeffs, s)
    add(2, {p: 1j * c for p, c in aG.items()}, None)
    bG = _terms_to_dict(b_monomial_terms, m, G.coeffs, s)
    add(3, {p: 1j * c for p, c in bG.items()}, None)

    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    scale = max(np.max(np.abs(rhs)), G.max_abs_coeff(), 1e-300)
    rel = np.max(np.abs(A @ sol - rhs)) / scale
    if rel > tol:
        raise ReconstructionError(
            f"no regular (Phi_1, Phi_3) for m={m}: best relative residual "
            f"{rel:.3e}")
    cut = 1e-12 * max(np.max(np.abs(sol)), 1.0)
    phi1 = GaussPoly(B, {nu: sol[i] for i, nu in enumerate(cand)
                         if abs(sol[i]) > cut})
    phi3 = GaussPoly(B, {nu: sol[n_c + i] for i, nu in enumerate(cand)
                         if abs(sol[n_c + i]) > cut})
    return phi1, phi3


def _lower_components(phi0, phi1, phi2, phi3, eps, k, M, m):
    """E and H blocks from the Phi block via the algebraic half of the
    radial system."""
    e1 = (apply_a(m, phi0) - 1j * eps * phi1) * (1.0 / M)
    h1 = (-1j * apply_a(m, phi2) + k * phi1) * (1.0 / M)
    e3 = (apply_b(m, phi0) - 1j * eps * phi3) * (1.0 / M)
    h3 = (1j * apply_b(m, phi2) - k * phi3) * (1.0 / M)
    e2 = (-1j * eps * phi2 - 1j * k * phi0) * (1.0 / M)
    h2 = (1j * apply_b(m - 1, phi1) - 1j * apply_a(m + 1, phi3)) * (1.0 / M)
    return e1, e2, e3, h1, h2, h3


def _normalize(state: TenComponentState) -> TenComponentState:
    comps = state.components()
    total = sum(norm_squared(c) for c in comps.values())
    if total == 0:
        return state
    dominant = max(comps, key=lambda name: norm_squared(comps[name]))
    lead = comps[dominant].coeffs[comps[dominant].lowest_power()]
    phase = lead / abs(lead)
    factor = phase.conjugate() / math.sqrt(total)
    return replace(state, **{name: factor * comp for name, comp in comps.items()})


# -- the three solution classes ----------------------------------------

def build_scalar_class(n: int, m: int, k: float, B: float, M: float,
                       normalize: bool = True) -> TenComponentState:
    """Scalar-like solution: Phi_1 = Phi_3 = 0, eps Phi_0 + k Phi_2 = 0,
    with Phi_0 = k phi_{n,m} and Phi_2 = -eps phi_{n,m}; H2 is identically
    zero and the energy obeys eps^2 = M^2 + k^2 + lambda^2."""
    level = energy(Branch.SCALAR, n, m, k, B, M)
    eps = level.epsilon
    if abs(eps * eps - k * k) < 1e-14:
        raise DegenerateParameterError("epsilon^2 = k^2 in scalar class")
    phi = build_mode(n, m, B).radial
    phi0 = k * phi
    phi2 = -eps * phi
    zero = _zero(B)
    e1, e2, e3, h1, h2, h3 = _lower_components(
        phi0, zero, phi2, zero, eps, k, M, m)
    state = TenComponentState(
        phi0=phi0, phi1=zero, phi2=phi2, phi3=zero,
        e1=e1, e2=e2, e3=e3, h1=h1, h2=h2, h3=h3,
        epsilon=eps, k=float(k), m=m, M=float(M), branch=Branch.SCALAR)
    return _normalize(state) if normalize else state


VARIANT_BRANCH = {"A": Branch.PLUS_B, "B": Branch.MINUS_B}


def _kernel_minus_b_state(m: int, k: float, B: float, M: float, eps: float,
                          normalize: bool) -> TenComponentState:
    """-B branch ground state for m <= -1: Phi_3 proportional to
    x^((|m|-1)/2) exp(-x/2), which a_{m+1} annihilates, so F, G, f, g all
    vanish and only (Phi_3, E_3, H_3) survive. The branch energy formula
    reduces to eps^2 = k^2 + M^2 here."""
    phi3 = build_mode(0, m + 1, B).radial
    zero = _zero(B)
    e1, e2, e3, h1, h2, h3 = _lower_components(
        zero, zero, zero, phi3, eps, k, M, m)
    state = TenComponentState(
        phi0=zero, phi1=zero, phi2=zero, phi3=phi3,
        e1=e1, e2=e2, e3=e3, h1=h1, h2=h2, h3=h3,
        epsilon=eps, k=float(k), m=m, M=float(M), branch=Branch.MINUS_B)
    return _normalize(state) if normalize else state


def build_branch_state(variant: str, n: int, m: int, k: float, B: float,
                       M: float, normalize: bool = True) -> TenComponentState:
    """Branch solution from the diagonalized (g, G) coupling.

    Variant A puts phi_{n,m} into the first primed amplitude, whose
    separated equation selects the +B energy branch; variant B the -B
    branch. The second primed amplitude vanishes. Pipeline: undo the
    diagonalizing transform, apply the linear relation
    f = -iG + (2B/M^2) g, set F = 0, solve for the Phi block and fill
    the E/H blocks algebraically.

    Two non-generic cases arise on the -B branch at n = 0: for m <= -1
    the state has all reduced amplitudes zero (Phi_3 spans the in-class
    kernel of a_{m+1}); for m = 0 no normalizable solution exists at the
    branch energy and ReconstructionError is raised.
    """
    if variant not in VARIANT_BRANCH:
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    branch = VARIANT_BRANCH[variant]
    level = energy(branch, n, m, k, B, M)
    eps = level.epsilon
    if abs(eps * eps - k * k) < 1e-14:
        raise DegenerateParameterError("epsilon^2 = k^2 in branch state")

    if branch is Branch.MINUS_B and n == 0 and m <= 0:
        if m == 0:
            raise ReconstructionError(
                "the -B branch has no normalizable n=0, m=0 state: the "
                "required Phi_1 amplitude falls outside the regular class")
        return _kernel_minus_b_state(m, k, B, M, eps, normalize)

    gamma_ratio = (eps * eps - k * k) / (M * M)
    S, _ = diagonalize_coupling(gamma_ratio, variant, B)
    Sinv = np.linalg.inv(S)

    phi = build_mode(n, m, B).radial
    # primed vector (phi, 0); unprimed (g, G) = S^-1 (phi, 0)
    g = Sinv[0, 0] * phi
    G = Sinv[1, 0] * phi
    f = -1j * G + (2.0 * B / (M * M)) * g
    # F = 0 on branch states; invert (F, G) -> (Phi_0, Phi_2)
    denom = k * k - eps * eps
    phi0 = (-eps / denom) * G
    phi2 = (k / denom) * G

    Z1 = 0.5 * (f + g)
    Z3 = 0.5 * (f - g)
    phi1, phi3 = solve_phi13(m, eps, k, M, G, Z1, Z3)

    e1, e2, e3, h1, h2, h3 = _lower_components(
        phi0, phi1, phi2, phi3, eps, k, M, m)
    state = TenComponentState(
        phi0=phi0, phi1=phi1, phi2=phi2, phi3=phi3,
        e1=e1, e2=e2, e3=e3, h1=h1, h2=h2, h3=h3,
        epsilon=eps, k=float(k), m=m, M=float(M), branch=branch)
    return _normalize(state) if normalize else state


# -- verification ------------------------------------------------------

def first_order_residuals(state: TenComponentState) -> list[GaussPoly]:
    """LHS - RHS of each of the ten first-order radial equations."""
    s, m = state, state.m
    eps, k, M = state.epsilon, state.k, state.M
    return [
        -apply_b(m - 1, s.e1) - apply_a(m + 1, s.e3) - 1j * k * s.e2
        - M * s.phi0,
        -1j * apply_b(m - 1, s.h1) + 1j * apply_a(m + 1, s.h3)
        + 1j * eps * s.e2 - M * s.phi2,
        1j * apply_a(m, s.h2) + 1j * eps * s.e1 - k * s.h1 - M * s.phi1,
        -1j * apply_b(m, s.h2) + 1j * eps * s.e3 + k * s.h3 - M * s.phi3,
        apply_a(m, s.phi0) - 1j * eps * s.phi1 - M * s.e1,
        -1j * apply_a(m, s.phi2) + k * s.phi1 - M * s.h1,
        apply_b(m, s.phi0) - 1j * eps * s.phi3 - M * s.e3,
        1j * apply_b(m, s.phi2) - k * s.phi3 - M * s.h3,
        -1j * eps * s.phi2 - 1j * k * s.phi0 - M * s.e2,
        1j * apply_b(m - 1, s.phi1) - 1j * apply_a(m + 1, s.phi3) - M * s.h2,
    ]


def _normalized_max(residuals: list[GaussPoly],
                    state: TenComponentState) -> float:
    scale = max(comp.max_abs_coeff() for comp in state.components().values())
    if scale == 0:
        return 0.0
    return max(res.max_abs_coeff() for res in residuals) / scale


def residual(state: TenComponentState) -> float:
    """Maximum coefficient-norm of the ten first-order equation residuals,
    normalized by the largest component coefficient-norm."""
    return _normalized_max(first_order_residuals(state), state)


def verify_second_order(state: TenComponentState) -> float:
    """Residual of the four second-order equations for the Phi block."""
    s, m = state, state.m
    eps, k, M = state.epsilon, state.k, state.M

    def delta(f):
        return -apply_b(m - 1, apply_a(m, f)) - apply_a(m + 1, apply_b(m, f))

    mix = apply_b(m - 1, s.phi1) + apply_a(m + 1, s.phi3)
    residuals = [
        delta(s.phi0) - (k * k + M * M) * s.phi0 - eps * k * s.phi2
        + 1j * eps * mix,
        delta(s.phi2) + (eps * eps - M * M) * s.phi2 + eps * k * s.phi0
        - 1j * k * mix,
        -apply_a(m, apply_b(m - 1, s.phi1))
        + (eps * eps - k * k - M * M) * s.phi1
        + apply_a(m, apply_a(m + 1, s.phi3))
        + 1j * eps * apply_a(m, s.phi0) + 1j * k * apply_a(m, s.phi2),
        -apply_b(m, apply_a(m + 1, s.phi3))
        + (eps * eps - k * k - M * M) * s.phi3
        + apply_b(m, apply_b(m - 1, s.phi1))
        + 1j * eps * apply_b(m, s.phi0) + 1j * k * apply_b(m, s.phi2),
    ]
    return _normalized_max(residuals, state)


def perturbed(state: TenComponentState, amount: float = 0.01,
              component: str = "phi2") -> TenComponentState:
    """Test probe: add `amount` of the next-higher mode to one component."""
    comps = state.components()
    target = comps[component]
    n_guess = 0 if target.is_zero() else \
        max(0, (target.highest_power() - abs(state.m)) // 2)
    bump = build_mode(n_guess + 1, state.m, state.B).radial
    return replace(state, **{component: target + amount * bump})
