"""Operators on normalized functions: the U-functional, the g-transform,
the Schwarz-function representation and the coefficient membership criteria.

Sign convention: ``z/f(z) = 1 + b1 z + b2 z**2 + ...`` always has ``b1 = -a2``,
so ``g = (z/f - 1)/(-a2)`` and ``g = (z/f - 1)/b1`` are the same function.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotInU, PoleAtSample, VanishingA2
from .series import (
    NormalizedFunction,
    TruncatedSeries,
    derivative,
    evaluate,
    mul,
    reciprocal,
)

A2_EPS = 1e-13
POLE_EPS = 1e-13
CRITERION_SLACK = 1e-12
SCHWARZ_SLACK = 1e-9
SCHWARZ_RINGS = (0.3, 0.6, 0.9)
SCHWARZ_ANGLES = 64
NONNEG_TOL = 1e-13


@dataclass(frozen=True, eq=False)
class ReciprocalRep:
    """Coefficients of ``z/f(z) = 1 + b1 z + b2 z**2 + ...``."""

    b: TruncatedSeries

    def __post_init__(self):
        if self.b.coeffs[0] != 1:
            raise ValueError("z/f(z) must have constant term exactly 1")

    @classmethod
    def from_coeffs(cls, b, order: int | None = None) -> "ReciprocalRep":
        return cls(TruncatedSeries(b, order=order))

    @classmethod
    def of(cls, f: NormalizedFunction) -> "ReciprocalRep":
        b = reciprocal(f.over_z()).coeffs.copy()
        b[0] = 1.0
        return cls(TruncatedSeries(b))

    @property
    def order(self) -> int:
        return self.b.order

    def __getitem__(self, n: int) -> complex:
        return self.b[n]

    def to_function(self) -> NormalizedFunction:
        """Invert back to ``f = z / (z/f)``."""
        over_z = reciprocal(self.b).coeffs.copy()
        over_z[0] = 1.0
        return NormalizedFunction(TruncatedSeries(over_z).shift_up(1))


@dataclass(frozen=True, eq=False)
class SchwarzFunction:
    """omega with ``z/f = 1 - a2 z - z omega(z)``; certified ``|omega(z)| <= |z|`` on a grid."""

    omega: TruncatedSeries
    source_a2: complex

    def __call__(self, z):
        return evaluate(self.omega, z)


@dataclass(frozen=True)
class SPlusVerdict:
    """Outcome of the S+ coefficient test; truthy iff the test passed."""

    holds: bool
    total: float
    nonnegativity_violation: bool = False

    def __bool__(self) -> bool:
        return self.holds


def u_functional(f: NormalizedFunction) -> TruncatedSeries:
    """Series of ``U_f(z) = (z/f(z))**2 f'(z) - 1``."""
    q = ReciprocalRep.of(f).b
    u = mul(mul(q, q), derivative(f.series)).coeffs.copy()
    u[0] -= 1.0
    return TruncatedSeries(u)


def u_eval(f: NormalizedFunction, z):
    """Pointwise U_f(z), computed from f and f' directly rather than from the U-series."""
    over_z = evaluate(f.over_z(), z)
    if np.any(np.abs(over_z) < POLE_EPS):
        raise PoleAtSample(f"f(z)/z vanishes at a sample point (min |f/z| = {np.min(np.abs(over_z)):.3g})")
    fp = evaluate(derivative(f.series), z)
    return fp / over_z**2 - 1


def _check_a2(a2: complex) -> None:
    if abs(a2) <= A2_EPS:
        raise VanishingA2(f"|a2| = {abs(a2):.3g}: the g-transform needs a2 != 0")


def g_transform(f: NormalizedFunction) -> NormalizedFunction:
    """``g(z) = (z/f(z) - 1) / (-a2)``."""
    a2 = f.a2
    _check_a2(a2)
    b = ReciprocalRep.of(f).b.coeffs
    g = -b / a2
    g[0] = 0.0
    g[1] = 1.0  # b1 = -a2 exactly
    return NormalizedFunction(TruncatedSeries(g))


def schwarz_grid() -> np.ndarray:
    theta = 2 * np.pi * np.arange(SCHWARZ_ANGLES) / SCHWARZ_ANGLES
    return np.concatenate([r * np.exp(1j * theta) for r in SCHWARZ_RINGS])


def schwarz_excess(omega: TruncatedSeries) -> float:
    """Largest ``|omega(z)| - |z|`` over the validation grid."""
    z = schwarz_grid()
    return float(np.max(np.abs(evaluate(omega, z)) - np.abs(z)))


def extract_omega(f: NormalizedFunction) -> SchwarzFunction:
    """omega = (1 - a2 z - z/f(z)) / z, validated against |omega(z)| <= |z|."""
    a2 = f.a2
    b = ReciprocalRep.of(f).b.coeffs
    # (1 - a2 z - z/f)/z = -(b1 + a2) - b2 z - b3 z^2 - ...
    w = -b[1:].copy()
    w[0] = -(b[1] + a2)
    omega = TruncatedSeries(w)
    excess = schwarz_excess(omega)
    if excess > SCHWARZ_SLACK:
        raise NotInU(f"|omega(z)| exceeds |z| by {excess:.3g} on the validation grid")
    return SchwarzFunction(omega, a2)


def g_from_omega(w, a2: complex) -> NormalizedFunction:
    """``g(z) = z + z omega(z) / a2``."""
    _check_a2(a2)
    omega = w.omega if isinstance(w, SchwarzFunction) else w
    g = np.concatenate([[0.0], omega.coeffs / a2])
    g[1] += 1.0
    return NormalizedFunction(TruncatedSeries(g))


def lemma1_sum(f: NormalizedFunction) -> float:
    n = np.arange(2, f.order + 1)
    return float(np.sum(n * np.abs(f.coeffs[2:])))


def lemma1_criterion(f: NormalizedFunction) -> bool:
    """Sufficient condition ``sum_{n>=2} n |a_n| <= 1`` (truncated at the series order)."""
    return lemma1_sum(f) <= 1 + CRITERION_SLACK


def splus_criterion(rep: ReciprocalRep) -> SPlusVerdict:
    """``sum_{n>=2} (n-1) b_n <= 1`` with every ``b_n`` real and non-negative."""
    b = rep.b.coeffs[1:]
    if np.any(np.abs(b.imag) > NONNEG_TOL) or np.any(b.real < -NONNEG_TOL):
        return SPlusVerdict(False, float("nan"), nonnegativity_violation=True)
    n = np.arange(2, rep.order + 1)
    total = float(np.sum((n - 1) * rep.b.coeffs[2:].real))
    return SPlusVerdict(total <= 1 + CRITERION_SLACK, total)


def area_theorem_bound(rep: ReciprocalRep) -> float:
    """``sum_{n>=2} (n-1) |b_n|**2``; at most 1 for every univalent f."""
    n = np.arange(2, rep.order + 1)
    return float(np.sum((n - 1) * np.abs(rep.b.coeffs[2:]) ** 2))
