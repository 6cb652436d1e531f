import json
import math

import numpy as np
import pytest

from dkp_magnetic.radial import apply_a, apply_b, norm_squared
from dkp_magnetic.spectrum import Branch, DegenerateParameterError
from dkp_magnetic.wavefunction import (ReconstructionError, build_branch_state,
                                       build_scalar_class, perturbed, residual,
                                       scalar_quadruple, verify_second_order)


def total_norm(state):
    return sum(norm_squared(c) for c in state.components().values())


# -- scalar-like class --------------------------------------------------

def test_scalar_structure():
    st = build_scalar_class(1, 2, 0.7, 1.0, 1.5)
    assert st.phi1.is_zero() and st.phi3.is_zero()
    assert st.h2.is_zero()
    q = scalar_quadruple(st)
    # G = eps Phi_0 + k Phi_2 vanishes identically on this class
    assert q.G.max_abs_coeff() <= 1e-12
    assert q.f.is_zero() and q.g.is_zero()
    assert st.epsilon == pytest.approx(math.sqrt(1.5**2 + 0.7**2 + 14.0))


def test_scalar_residuals():
    for (n, m, k, B, M) in [(0, 0, 0.0, 1.0, 1.0), (2, -1, 0.3, 0.5, 2.0),
                            (1, 3, 0.7, 2.0, 1.0)]:
        st = build_scalar_class(n, m, k, B, M)
        assert residual(st) <= 1e-10
        assert verify_second_order(st) <= 1e-10


def test_scalar_k_zero_has_no_phi0():
    st = build_scalar_class(0, 0, 0.0, 1.0, 1.0)
    assert st.phi0.is_zero()
    assert not st.phi2.is_zero()


def test_scalar_normalized():
    st = build_scalar_class(1, -2, 0.4, 0.5, 1.0)
    assert total_norm(st) == pytest.approx(1.0, abs=1e-12)


# -- branch classes -----------------------------------------------------

@pytest.mark.parametrize("variant,branch", [("A", Branch.PLUS_B),
                                            ("B", Branch.MINUS_B)])
def test_branch_energy_and_residual(variant, branch):
    st = build_branch_state(variant, 0, 0, 0.0, 1.0, 1.0) if variant == "A" \
        else build_branch_state(variant, 1, 0, 0.0, 1.0, 1.0)
    assert st.branch is branch
    assert residual(st) <= 1e-10
    assert verify_second_order(st) <= 1e-10


def test_plus_b_anchor_energy():
    st = build_branch_state("A", 0, 0, 0.0, 1.0, 1.0)
    assert st.epsilon == pytest.approx(3.0, abs=1e-12)


def test_branch_reduced_structure():
    for variant in ("A", "B"):
        st = build_branch_state(variant, 1, -2, 0.5, 1.0, 1.0)
        q = scalar_quadruple(st)
        scale = max(c.max_abs_coeff() for c in st.components().values())
        # F = k Phi_0 + eps Phi_2 vanishes on branch states
        assert q.F.max_abs_coeff() / scale <= 1e-12
        # linear relation f + iG - (2B/M^2) g = 0
        rel = q.f + 1j * q.G - (2.0 * st.B / st.M**2) * q.g
        assert rel.max_abs_coeff() / scale <= 1e-12


def test_branch_separated_equation():
    # the primed amplitude combination satisfies
    # (Delta + eps^2 - k^2 - M^2 -+ 2B sqrt(gamma)) = 0 on its branch
    for variant, sign in (("A", -1.0), ("B", +1.0)):
        st = build_branch_state(variant, 2, 1, 0.3, 1.0, 1.0)
        q = scalar_quadruple(st)
        m, eps, k, M, B = st.m, st.epsilon, st.k, st.M, st.B
        gamma = (eps * eps - k * k) / (M * M)
        lam = 2.0 * B * math.sqrt(gamma)
        for amp in (q.g, q.G):
            delta = -apply_b(m - 1, apply_a(m, amp)) \
                - apply_a(m + 1, apply_b(m, amp))
            res = delta + (eps * eps - k * k - M * M + sign * lam) * amp
            assert res.max_abs_coeff() / amp.max_abs_coeff() <= 1e-10


def test_branch_first_order_reduction_consistent():
    # Z1 = b_{m-1} Phi_1 and Z3 = a_{m+1} Phi_3 reproduce the (f, g) pair
    st = build_branch_state("A", 1, -1, 0.2, 0.5, 2.0)
    z1 = apply_b(st.m - 1, st.phi1)
    z3 = apply_a(st.m + 1, st.phi3)
    q = scalar_quadruple(st)
    assert ((z1 + z3) - q.f).max_abs_coeff() <= 1e-12
    assert ((z1 - z3) - q.g).max_abs_coeff() <= 1e-12


def test_residual_scan():
    for n in (0, 1, 3):
        for m in (-3, -1, 0, 2):
            for variant in ("A", "B"):
                if variant == "B" and n == 0 and m == 0:
                    continue
                st = build_branch_state(variant, n, m, 0.7, 0.5, 2.0)
                assert residual(st) <= 1e-10, (variant, n, m)


# -- non-generic -B branch cases ---------------------------------------

def test_minus_b_kernel_states():
    for m in (-1, -3):
        st = build_branch_state("B", 0, m, 0.4, 1.0, 1.0)
        assert residual(st) <= 1e-10
        # only the third spatial components survive
        assert not st.phi3.is_zero()
        for name in ("phi0", "phi1", "phi2", "e1", "e2", "h1", "h2"):
            assert st.components()[name].is_zero(), name
        assert st.epsilon == pytest.approx(math.sqrt(0.4**2 + 1.0), abs=1e-12)


def test_minus_b_ground_m0_has_no_state():
    with pytest.raises(ReconstructionError):
        build_branch_state("B", 0, 0, 0.0, 1.0, 1.0)


def test_bad_variant():
    with pytest.raises(ValueError):
        build_branch_state("C", 0, 0, 0.0, 1.0, 1.0)


# -- probes and serialization ------------------------------------------

def test_perturbation_detected():
    st = build_scalar_class(0, 0, 1.0, 1.0, 1.0)
    assert residual(perturbed(st)) > 1e-4


def test_json_export():
    st = build_branch_state("A", 0, 1, 0.0, 1.0, 1.0)
    obj = json.loads(st.to_json())
    assert obj["branch"] == "plus_b" and obj["m"] == 1
    assert set(obj) >= {"phi0", "phi1", "phi2", "phi3", "e1", "e2", "e3",
                        "h1", "h2", "h3", "epsilon", "k", "B", "M"}


def test_sample_csv_h2_zero_for_scalar():
    st = build_scalar_class(0, 1, 0.5, 1.0, 1.0)
    lines = st.sample_csv(np.linspace(0.1, 3.0, 5)).strip().split("\n")
    header = lines[0].split(",")
    i_re, i_im = header.index("h2_re"), header.index("h2_im")
    for line in lines[1:]:
        parts = line.split(",")
        assert parts[i_re] == "0" and parts[i_im] == "0"


def test_degenerate_branch_parameters():
    # massless-transverse limit can't happen with M > 0, but the guard
    # must also reject eps^2 = k^2 coming through the scalar route
    with pytest.raises((DegenerateParameterError, ValueError)):
        build_scalar_class(0, 0, 0.0, 1.0, 0.0)
