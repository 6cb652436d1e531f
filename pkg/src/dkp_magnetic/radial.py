"""Exact calculus for radial functions of the form

    f(r) = exp(-x/2) * sum_j c_j x^(j/2),   x = B r^2,

which is closed under the first-order ladder operators

    a_m = (1/sqrt(2)) ( d/dr + (m + B r^2)/r ),
    b_m = (1/sqrt(2)) (-d/dr + (m + B r^2)/r ),

and under the radial Laplacian Delta = -b_{m-1} a_m - a_{m+1} b_m.
On a monomial u_nu = x^(nu/2) exp(-x/2):

    a_m u_nu = sqrt(B/2) (nu + m) u_{nu-1}
    b_m u_nu = sqrt(B/2) [ (m - nu) u_{nu-1} + 2 u_{nu+1} ]

so every operation is coefficient-exact; no grids are involved.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


class NegativeHalfPowerError(ValueError):
    """An operator produced a monomial x^(j/2) with j < 0, i.e. a function
    singular at the origin and outside the supported class."""


@dataclass(frozen=True)
class GaussPoly:
    """Finite combination sum_j coeffs[j] * x^(j/2) * exp(-x/2), x = B r^2."""

    B: float
    coeffs: dict[int, complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.B <= 0:
            raise ValueError(f"magnetic parameter B must be > 0, got {self.B}")
        clean = {}
        for j, c in self.coeffs.items():
            if j < 0:
                raise NegativeHalfPowerError(
                    f"monomial x^({j}/2) is singular at the origin")
            if c != 0:
                clean[int(j)] = complex(c)
        object.__setattr__(self, "coeffs", clean)

    # -- basic algebra -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "GaussPoly") -> "GaussPoly":
        if self.B != other.B:
            raise ValueError("cannot add GaussPoly with different B")
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out.get(j, 0.0) + c
        return GaussPoly(self.B, out)

    def __sub__(self, other: "GaussPoly") -> "GaussPoly":
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "GaussPoly":
        return GaussPoly(self.B, {j: scalar * c for j, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "GaussPoly":
        return (-1.0) * self

    def max_abs_coeff(self) -> float:
        return max((abs(c) for c in self.coeffs.values()), default=0.0)

    def lowest_power(self) -> int:
        """Smallest half-power index j with nonzero coefficient."""
        if self.is_zero():
            raise ValueError("zero function has no lowest power")
        return min(self.coeffs)

    def highest_power(self) -> int:
        if self.is_zero():
            raise ValueError("zero function has no highest power")
        return max(self.coeffs)

    def conjugate(self) -> "GaussPoly":
        return GaussPoly(self.B, {j: c.conjugate() for j, c in self.coeffs.items()})

    # -- evaluation & serialization ------------------------------------

    def __call__(self, r):
        """Pointwise value at radius r (scalar or numpy array)."""
        import numpy as np

        x = self.B * np.asarray(r, dtype=float) ** 2
        total = np.zeros_like(x, dtype=complex)
        for j, c in self.coeffs.items():
            total = total + c * x ** (j / 2.0)
        return total * np.exp(-x / 2.0)

    def to_json(self) -> str:
        items = sorted(self.coeffs.items())
        return json.dumps({
            "B": self.B,
            "coeffs": [[j, c.real, c.imag] for j, c in items],
        })

    @classmethod
    def from_json(cls, text: str) -> "GaussPoly":
        obj = json.loads(text)
        return cls(obj["B"], {int(j): complex(re, im) for j, re, im in obj["coeffs"]})


def monomial(B: float, j: int, coeff: complex = 1.0) -> GaussPoly:
    """Single term coeff * x^(j/2) * exp(-x/2)."""
    return GaussPoly(B, {j: coeff})


# -- ladder operators --------------------------------------------------

def a_monomial_terms(m: int, nu: int) -> list[tuple[int, float]]:
    """Unrestricted action of a_m on u_nu as (power, coeff/sqrt(B/2)) pairs."""
    return [(nu - 1, float(nu + m))]


def b_monomial_terms(m: int, nu: int) -> list[tuple[int, float]]:
    """Unrestricted action of b_m on u_nu as (power, coeff/sqrt(B/2)) pairs."""
    return [(nu - 1, float(m - nu)), (nu + 1, 2.0)]


def _apply_terms(rule, m: int, f: GaussPoly) -> GaussPoly:
    scale = math.sqrt(f.B / 2.0)
    out: dict[int, complex] = {}
    for nu, c in f.coeffs.items():
        for j, w in rule(m, nu):
            if w == 0.0:
                continue
            if j < 0:
                raise NegativeHalfPowerError(
                    f"operator on x^({nu}/2) with m={m} produced x^({j}/2)")
            out[j] = out.get(j, 0.0) + scale * w * c
    return GaussPoly(f.B, out)


def apply_a(m: int, f: GaussPoly) -> GaussPoly:
    """a_m f = (1/sqrt 2)(d/dr + (m + B r^2)/r) f, exactly."""
    return _apply_terms(a_monomial_terms, m, f)


def apply_b(m: int, f: GaussPoly) -> GaussPoly:
    """b_m f = (1/sqrt 2)(-d/dr + (m + B r^2)/r) f, exactly."""
    return _apply_terms(b_monomial_terms, m, f)


def apply_delta(m: int, f: GaussPoly) -> GaussPoly:
    """Delta f = (d^2/dr^2 + (1/r) d/dr - (m + B r^2)^2/r^2) f, computed
    as -b_{m-1} a_m f - a_{m+1} b_m f."""
    return -apply_b(m - 1, apply_a(m, f)) - apply_a(m + 1, apply_b(m, f))


def apply_deriv(f: GaussPoly) -> GaussPoly:
    """d/dr f, exactly: d/dr u_nu = sqrt(B) (nu u_{nu-1} - u_{nu+1})."""
    out: dict[int, complex] = {}
    scale = math.sqrt(f.B)
    for nu, c in f.coeffs.items():
        if nu != 0:
            if nu - 1 < 0:
                raise NegativeHalfPowerError(
                    f"d/dr on x^({nu}/2) produced x^({nu - 1}/2)")
            out[nu - 1] = out.get(nu - 1, 0.0) + scale * nu * c
        out[nu + 1] = out.get(nu + 1, 0.0) - scale * c
    return GaussPoly(f.B, out)


def apply_delta_explicit(m: int, f: GaussPoly) -> GaussPoly:
    """Delta f via the explicit second-order form
    d^2/dr^2 + (1/r) d/dr - (m + B r^2)^2 / r^2, sharing no code with the
    ladder-operator route."""
    B = f.B
    df = apply_deriv(f)
    d2f = apply_deriv(df)
    out: dict[int, complex] = dict(d2f.coeffs)
    for nu, c in df.coeffs.items():
        # (1/r) d/dr term: multiply by sqrt(B) x^(-1/2)
        j = nu - 1
        if j < 0:
            raise NegativeHalfPowerError("(1/r) d/dr produced x^(-1/2)")
        out[j] = out.get(j, 0.0) + math.sqrt(B) * c
    for nu, c in f.coeffs.items():
        # (m + x)^2 / r^2 = B (m^2 x^-1 + 2m + x)
        for j, w in ((nu - 2, float(m * m)), (nu, 2.0 * m), (nu + 2, 1.0)):
            if w == 0.0:
                continue
            if j < 0:
                raise NegativeHalfPowerError(
                    f"centrifugal term on x^({nu}/2) produced x^({j}/2)")
            out[j] = out.get(j, 0.0) - B * w * c
    return GaussPoly(B, out)


def norm_squared(f: GaussPoly) -> float:
    """Integral of |f|^2 r dr over (0, inf):
    (1/2B) sum_{j,j'} c_j conj(c_{j'}) Gamma((j+j')/2 + 1)."""
    total = 0.0
    for j, c in f.coeffs.items():
        for jp, cp in f.coeffs.items():
            total += (c * cp.conjugate()).real * math.gamma((j + jp) / 2.0 + 1.0)
    return total / (2.0 * f.B)
