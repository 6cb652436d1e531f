"""10-dimensional DKP matrices in the cyclic basis.

Row/column layout is the 1-3-3-3 block partition of the ten-component
wavefunction: index 0 is the scalar component, 1..3 the vector block,
4..6 the E-block and 7..9 the H-block.
"""

import json

import numpy as np

SQ2 = 1.0 / np.sqrt(2.0)

# 3-row-vectors e_i and 3x3 matrices tau_i entering the spatial betas.
E_VEC = {
    1: SQ2 * np.array([-1j, 0.0, 1j]),
    2: SQ2 * np.array([1.0, 0.0, 1.0], dtype=complex),
    3: np.array([0.0, 1j, 0.0]),
}

TAU = {
    1: SQ2 * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex),
    2: SQ2 * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]]),
    3: np.diag([1.0, 0.0, -1.0]).astype(complex),
}

# Metric signature (+,-,-,-).
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


def build_beta(a: int) -> np.ndarray:
    """Return the 10x10 beta matrix for spacetime index a in 0..3.

    beta^0 couples the vector and E blocks with +/- i identities; the
    spatial betas are assembled from e_i (with e_i^+ its conjugate
    transpose) and tau_i.
    """
    if a not in (0, 1, 2, 3):
        raise ValueError(f"spacetime index must be in 0..3, got {a!r}")
    beta = np.zeros((10, 10), dtype=complex)
    if a == 0:
        beta[1:4, 4:7] = 1j * np.eye(3)
        beta[4:7, 1:4] = -1j * np.eye(3)
    else:
        beta[0, 4:7] = E_VEC[a]
        beta[1:4, 7:10] = TAU[a]
        beta[4:7, 0] = -E_VEC[a].conj()
        beta[7:10, 1:4] = -TAU[a]
    return beta


def build_S3() -> np.ndarray:
    """Spin projection generator: block-diag(0, tau_3, tau_3, tau_3)."""
    s3 = np.zeros((10, 10), dtype=complex)
    for lo in (1, 4, 7):
        s3[lo:lo + 3, lo:lo + 3] = TAU[3]
    return s3


def build_J12() -> np.ndarray:
    """Rotation generator beta^1 beta^2 - beta^2 beta^1 (equals -i S_3)."""
    b1, b2 = build_beta(1), build_beta(2)
    return b1 @ b2 - b2 @ b1


def verify_trilinear(a: int, b: int, c: int, tol: float = 1e-14) -> bool:
    """Check beta^a beta^b beta^c + beta^c beta^b beta^a
    = eta^{bc} beta^a + eta^{ba} beta^c entrywise to tol."""
    ba, bb, bc = build_beta(a), build_beta(b), build_beta(c)
    lhs = ba @ bb @ bc + bc @ bb @ ba
    rhs = METRIC[b, c] * ba + METRIC[b, a] * bc
    return bool(np.max(np.abs(lhs - rhs)) <= tol)


def matrix_to_json(mat: np.ndarray) -> str:
    """Debug dump: 10x10 nested array of [re, im] pairs."""
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in mat]
    return json.dumps(rows)
