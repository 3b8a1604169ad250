"""Radii of class-U membership for the g-transform.

Three radii are available:

* ``radius_theorem1`` -- closed form for f in U with 5/4 <= |a2| <= 2;
* ``radius_half_a2``  -- |a2|/2, justified for f in S+ (any |a2|) or for f in U
  with |a2| <= 1;
* ``radius_theorem3`` -- root of ``eq11_lhs(r) = |a2|**2`` for f in S,
  found by bisection.

Only the half-|a2| radius is known to be sharp; the other two are lower bounds.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum

from .errors import DomainError, NoBracket

THM1_LO = 1.25
THM1_HI = 2.0
ENDPOINT_SLACK = 1e-12
R_MAX = 1 - 1e-9
DEFAULT_TOL = 1e-13
_EPS = 2.220446049250313e-16


class Method(str, Enum):
    CLOSED_FORM_THM1 = "closed_form_thm1"
    HALF_A2 = "half_a2"
    BISECTION_EQ11 = "bisection_eq11"


@dataclass(frozen=True)
class RadiusResult:
    value: float
    method: Method
    bracket: tuple[float, float] | None = None
    tol: float = 0.0

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise ValueError(f"radius {self.value} outside (0, 1]")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["method"] = self.method.value
        d["bracket"] = list(self.bracket) if self.bracket is not None else None
        return d


@dataclass(frozen=True)
class PhiAnalysis:
    """Everything the closed-form U-class estimate produces for one (|a2|, r)."""

    a2_mod: float
    r: float
    t0: float
    phi_at_t0: float
    bound: float


def _check_thm1_range(a2_mod: float) -> None:
    if not THM1_LO - ENDPOINT_SLACK <= a2_mod <= THM1_HI + ENDPOINT_SLACK:
        raise DomainError(
            f"|a2| = {a2_mod} violates the hypothesis 5/4 <= |a2| <= 2 of the closed-form radius")


def phi(a2_mod: float, r: float, t: float) -> float:
    """``(|a2| r^2 - (|a2| - 1 + r^2) t^2) / (|a2| - t)^2`` with t = |omega(z)|."""
    if a2_mod <= t:
        raise DomainError(f"phi needs |a2| > t, got |a2| = {a2_mod}, t = {t}")
    return (a2_mod * r * r - (a2_mod - 1 + r * r) * t * t) / (a2_mod - t) ** 2


def phi_maximizer(a2_mod: float, r: float) -> float:
    """Critical point t0 = r^2 / (|a2| - 1 + r^2) of phi in t."""
    if a2_mod <= 1:
        raise DomainError(f"phi_maximizer needs |a2| > 1, got {a2_mod}")
    return r * r / (a2_mod - 1 + r * r)


def phi_max_closed_form(a2_mod: float, r: float) -> float:
    """phi(t0) simplified: (|a2|-1+r^2) r^2 / ((|a2|-1)(|a2|+r^2))."""
    return (a2_mod - 1 + r * r) * r * r / ((a2_mod - 1) * (a2_mod + r * r))


def u_bound_theorem1(a2_mod: float, r: float) -> float:
    """Upper bound for |U_g(z)| on |z| = r when f is in U and 5/4 <= |a2| <= 2."""
    _check_thm1_range(a2_mod)
    if not 0 <= r < 1:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    return phi_max_closed_form(a2_mod, r) / (1 - r * r)


def phi_analysis(a2_mod: float, r: float) -> PhiAnalysis:
    t0 = phi_maximizer(a2_mod, r)
    value = phi(a2_mod, r, t0)
    return PhiAnalysis(a2_mod, r, t0, value, value / (1 - r * r))


def radius_theorem1(a2_mod: float) -> RadiusResult:
    _check_thm1_range(a2_mod)
    a = min(max(a2_mod, THM1_LO), THM1_HI)
    r2 = (1 - a + math.sqrt(a * a + 2 * a - 3)) / 2
    return RadiusResult(math.sqrt(r2), Method.CLOSED_FORM_THM1, None, 4 * _EPS)


def radius_half_a2(a2_mod: float) -> RadiusResult:
    if not 0 < a2_mod <= 2:
        raise DomainError(f"|a2| must lie in (0, 2], got {a2_mod}")
    return RadiusResult(a2_mod / 2, Method.HALF_A2, None, 0.0)


def half_a2_justification(a2_mod: float) -> str:
    """Which hypothesis backs the |a2|/2 radius for this |a2|."""
    if a2_mod <= 1:
        return "f in U with 0 < |a2| <= 1, or f in S+"
    return "f in S+ only (for f in U the |a2|/2 radius needs |a2| <= 1)"


def eq11_lhs(r: float) -> float:
    """``(3 r^2 - 2 r^4)/(1 - r^2)^2 - log(1 - r^2)``, increasing on [0, 1)."""
    if not 0 <= r < 1:
        raise DomainError(f"r must lie in [0, 1), got {r}")
    x = r * r
    return (3 * x - 2 * x * x) / (1 - x) ** 2 - math.log1p(-x)


def radius_theorem3(a2_mod: float, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Bisection for the unique root of ``eq11_lhs(r) = |a2|**2`` in (0, 1)."""
    if not 0 < a2_mod <= 2:
        raise DomainError(f"|a2| must lie in (0, 2], got {a2_mod}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    target = a2_mod * a2_mod
    lo, hi = 0.0, R_MAX
    if eq11_lhs(hi) < target:
        raise NoBracket(f"eq11_lhs({hi}) < {target}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if eq11_lhs(mid) < target:
            lo = mid
        else:
            hi = mid
    return RadiusResult(0.5 * (lo + hi), Method.BISECTION_EQ11, (lo, hi), hi - lo)
