import itertools

import numpy as np
import pytest

from dkp_magnetic import algebra

S2 = 1.0 / np.sqrt(2.0)


def golden_beta0():
    m = np.zeros((10, 10), dtype=complex)
    m[1:4, 4:7] = 1j * np.eye(3)
    m[4:7, 1:4] = -1j * np.eye(3)
    return m


def golden_beta3():
    # e3 = (0, i, 0), tau3 = diag(1, 0, -1)
    m = np.zeros((10, 10), dtype=complex)
    m[0, 5] = 1j
    m[5, 0] = 1j  # -conj(i) = i
    m[1, 7] = 1.0
    m[3, 9] = -1.0
    m[7, 1] = -1.0
    m[9, 3] = 1.0
    return m


def golden_beta1():
    m = np.zeros((10, 10), dtype=complex)
    m[0, 4:7] = S2 * np.array([-1j, 0, 1j])
    m[4:7, 0] = -S2 * np.array([1j, 0, -1j])
    tau1 = S2 * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
    m[1:4, 7:10] = tau1
    m[7:10, 1:4] = -tau1
    return m


def golden_beta2():
    m = np.zeros((10, 10), dtype=complex)
    m[0, 4:7] = S2 * np.array([1, 0, 1], dtype=complex)
    m[4:7, 0] = -S2 * np.array([1, 0, 1], dtype=complex)
    tau2 = S2 * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]])
    m[1:4, 7:10] = tau2
    m[7:10, 1:4] = -tau2
    return m


@pytest.mark.parametrize("a,golden", [
    (0, golden_beta0), (1, golden_beta1), (2, golden_beta2), (3, golden_beta3),
])
def test_beta_matches_golden_display(a, golden):
    assert np.max(np.abs(algebra.build_beta(a) - golden())) <= 1e-14


def test_beta0_cubed_is_beta0():
    b0 = algebra.build_beta(0)
    assert np.allclose(b0 @ b0 @ b0, b0, atol=1e-14)


def test_bad_index_rejected():
    with pytest.raises(ValueError):
        algebra.build_beta(4)
    with pytest.raises(ValueError):
        algebra.build_beta(-1)


def test_J12_equals_minus_i_S3():
    assert np.max(np.abs(algebra.build_J12() + 1j * algebra.build_S3())) <= 1e-14


def test_J12_diagonal_structure():
    d = np.diag(1j * algebra.build_J12()).real
    assert np.allclose(d, [0, 1, 0, -1, 1, 0, -1, 1, 0, -1], atol=1e-14)


def test_J12_commutes_with_beta0_and_beta3():
    j12 = algebra.build_J12()
    for a in (0, 3):
        b = algebra.build_beta(a)
        assert np.max(np.abs(j12 @ b - b @ j12)) <= 1e-14


def test_iJ12_eigenvalue_multiplicities():
    w = np.sort(np.linalg.eigvals(1j * algebra.build_J12()).real)
    assert np.allclose(w, [-1] * 3 + [0] * 4 + [1] * 3, atol=1e-12)


def test_trilinear_special_triples():
    assert algebra.verify_trilinear(0, 0, 0)
    assert algebra.verify_trilinear(1, 2, 3)


def test_trilinear_all_64_triples():
    for a, b, c in itertools.product(range(4), repeat=3):
        assert algebra.verify_trilinear(a, b, c), (a, b, c)


def test_json_dump_shape():
    import json

    rows = json.loads(algebra.matrix_to_json(algebra.build_beta(0)))
    assert len(rows) == 10 and all(len(r) == 10 for r in rows)
    assert rows[1][4] == [0.0, 1.0]  # +i coupling Phi-row to E-col
