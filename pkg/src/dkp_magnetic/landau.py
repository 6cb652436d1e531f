"""Normalized radial eigenfunctions of Delta and their quantized eigenvalues.

The regular solution with magnetic quantum number m is

    phi_{n,m}(r) = N * x^(|m|/2) * exp(-x/2) * P_n(x),   x = B r^2,

where P_n is the terminating confluent-hypergeometric series with
parameters (-n, |m|+1), i.e. a polynomial of degree n, and

    Delta phi_{n,m} = -lambda^2 phi_{n,m},
    lambda^2 = 4B (n + 1/2 + (|m| + m)/2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .radial import GaussPoly, apply_delta, norm_squared


def lambda_sq(n: int, m: int, B: float) -> float:
    """Transverse quantization eigenvalue 4B(n + 1/2 + (|m|+m)/2)."""
    if n < 0:
        raise ValueError(f"radial quantum number n must be >= 0, got {n}")
    if B <= 0:
        raise ValueError(f"magnetic parameter B must be > 0, got {B}")
    return 4.0 * B * (n + 0.5 + (abs(m) + m) / 2.0)


def hypergeometric_poly_coeffs(n: int, c: int) -> list[float]:
    """Coefficients of the terminating series 1F1(-n; c; x), degree n.

    Forward recurrence t_{i+1} = t_i (i - n) / ((c + i)(i + 1)), t_0 = 1.
    """
    t = 1.0
    out = [t]
    for i in range(n):
        t *= (i - n) / ((c + i) * (i + 1.0))
        out.append(t)
    return out


@dataclass(frozen=True)
class LandauMode:
    """Normalized radial eigenfunction of Delta with quantum numbers (n, m)."""

    n: int
    m: int
    B: float
    radial: GaussPoly
    lambda_sq: float

    def to_json(self) -> str:
        obj = json.loads(self.radial.to_json())
        obj.update(n=self.n, m=self.m, lambda_sq=self.lambda_sq)
        return json.dumps(obj)


def build_mode(n: int, m: int, B: float) -> LandauMode:
    """Construct the normalized mode phi_{n,m}.

    The hypergeometric polynomial sits at half-powers |m|, |m|+2, ...;
    the normalization makes norm_squared equal 1 with a real positive
    leading (lowest-power) coefficient.
    """
    lam2 = lambda_sq(n, m, B)
    poly = hypergeometric_poly_coeffs(n, abs(m) + 1)
    raw = GaussPoly(B, {abs(m) + 2 * i: c for i, c in enumerate(poly)})
    scale = 1.0 / math.sqrt(norm_squared(raw))
    return LandauMode(n=n, m=m, B=B, radial=scale * raw, lambda_sq=lam2)


def eigen_defect(mode: LandauMode) -> float:
    """Relative coefficient-wise defect of Delta phi = -lambda^2 phi."""
    resid = apply_delta(mode.m, mode.radial) + mode.lambda_sq * mode.radial
    return resid.max_abs_coeff() / mode.radial.max_abs_coeff()
