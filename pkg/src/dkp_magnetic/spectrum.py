"""Energy spectra of the three linearly independent solution classes.

With lambda^2 = 4B(n + 1/2 + (|m|+m)/2) and D = sqrt(B^2 + M^2(M^2 + lambda^2)):

    SCALAR:   epsilon^2 = M^2 + k^2 + lambda^2
    PLUS_B:   sqrt(epsilon^2 - k^2) = ( B + D) / M
    MINUS_B:  sqrt(epsilon^2 - k^2) = (-B + D) / M

The PLUS_B/MINUS_B split comes from diagonalizing the 2x2 coupling
between the g and G amplitudes, with off-diagonal entries 2iB and
-2iB*gamma, gamma = (epsilon^2 - k^2)/M^2.
"""

from __future__ import annotations

import enum
import io
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .landau import lambda_sq


class Branch(enum.Enum):
    SCALAR = "scalar"
    PLUS_B = "plus_b"
    MINUS_B = "minus_b"


# Tie-break order for equal energies.
_BRANCH_ORDER = {Branch.SCALAR: 0, Branch.MINUS_B: 1, Branch.PLUS_B: 2}


class DegenerateParameterError(ValueError):
    """epsilon^2 = k^2: the (F, G) -> (Phi_0, Phi_2) inversion is singular."""


@dataclass(frozen=True)
class Level:
    branch: Branch
    n: int
    m: int
    k: float
    B: float
    M: float
    lambda_sq: float
    epsilon: float

    def record(self) -> dict:
        return {
            "branch": self.branch.value, "n": self.n, "m": self.m,
            "k": self.k, "B": self.B, "M": self.M,
            "lambda_sq": self.lambda_sq, "epsilon": self.epsilon,
        }


@dataclass(frozen=True)
class CouplingMatrix:
    """2x2 coupling of (g, G): off-diagonals 2iB and -2iB*gamma_ratio."""

    gamma_ratio: float
    B: float = 1.0

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[0.0, 2j * self.B],
                         [-2j * self.B * self.gamma_ratio, 0.0]])


def diagonalize_coupling(gamma_ratio: float, variant: str, B: float = 1.0):
    """Diagonalize the (g, G) coupling matrix.

    Returns (S, (lam1, lam2)) with S rows chosen per variant:
    variant "A" gives eigenvalues (+2B sqrt(gamma), -2B sqrt(gamma)),
    variant "B" the swapped assignment. S @ C @ S^-1 is diagonal.
    """
    if gamma_ratio <= 0:
        raise DegenerateParameterError(
            f"gamma_ratio must be > 0 (epsilon^2 > k^2), got {gamma_ratio}")
    if variant not in ("A", "B"):
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    sg = math.sqrt(gamma_ratio)
    lam = 2.0 * B * sg
    if variant == "A":
        S = np.array([[-1j * sg, 1.0], [1j * sg, 1.0]])
        eigs = (lam, -lam)
    else:
        S = np.array([[1j * sg, 1.0], [-1j * sg, 1.0]])
        eigs = (-lam, lam)
    return S, eigs


def energy(branch: Branch, n: int, m: int, k: float, B: float, M: float,
           sign: int = +1) -> Level:
    """Energy level of the given branch; sign selects the root of epsilon^2."""
    if M <= 0:
        raise ValueError(f"mass parameter M must be > 0, got {M}")
    lam2 = lambda_sq(n, m, B)
    if branch is Branch.SCALAR:
        eps2 = M * M + k * k + lam2
    else:
        D = math.sqrt(B * B + M * M * (M * M + lam2))
        u = (B + D) / M if branch is Branch.PLUS_B else (-B + D) / M
        eps2 = k * k + u * u
    return Level(branch=branch, n=n, m=m, k=float(k), B=float(B), M=float(M),
                 lambda_sq=lam2, epsilon=sign * math.sqrt(eps2))


def enumerate_levels(n_max: int, m_range: Iterable[int], k_values: Sequence[float],
                     B: float, M: float,
                     branches: Sequence[Branch] = tuple(Branch)) -> list[Level]:
    """All branch/quantum-number combinations, sorted by energy ascending.

    Ties break by branch order SCALAR < MINUS_B < PLUS_B, then n, m, k.
    """
    ms = sorted(set(int(m) for m in m_range))
    levels = [
        energy(branch, n, m, k, B, M)
        for branch in branches
        for n in range(n_max + 1)
        for m in ms
        for k in k_values
    ]
    levels.sort(key=lambda lv: (lv.epsilon, _BRANCH_ORDER[lv.branch],
                                lv.n, lv.m, lv.k))
    return levels


CSV_COLUMNS = ("branch", "n", "m", "k", "B", "M", "lambda_sq", "epsilon")


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def levels_to_csv(levels: Iterable[Level]) -> str:
    """Deterministic CSV: fixed column order, 9 significant digits."""
    buf = io.StringIO()
    buf.write(",".join(CSV_COLUMNS) + "\n")
    for lv in levels:
        rec = lv.record()
        buf.write(",".join(_fmt(rec[col]) for col in CSV_COLUMNS) + "\n")
    return buf.getvalue()


def levels_to_json(levels: Iterable[Level]) -> str:
    return json.dumps([lv.record() for lv in levels], indent=2)
