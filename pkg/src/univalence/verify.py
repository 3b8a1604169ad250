"""Sampling-based verification: disk grids, membership reports, a brute-force
univalence oracle, the extremal family ``z/f1 = 1 + b z + z**2`` and random
members of the classes the radius theorems talk about.

Every verdict here is a statement about a finite grid, never about the open
disk; the names (``holds_on_grid``) say so.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from .analysis import (
    POLE_EPS,
    ReciprocalRep,
    SchwarzFunction,
    g_transform,
    u_eval,
)
from .errors import DomainError, PoleAtSample, ZeroDenominator
from .series import (
    DEFAULT_ORDER,
    NormalizedFunction,
    TruncatedSeries,
    derivative,
    evaluate,
    reciprocal,
)

RING_PULL_IN = 1e-6
COLLISION_TOL = 1e-10
SEPARATION_GUARD = 1e-6


class Spacing(str, Enum):
    UNIFORM_R = "uniform_r"
    UNIFORM_R_SQUARED = "uniform_r_squared"


class Quantity(str, Enum):
    U = "U"
    F_PRIME_MINUS_1 = "f_prime_minus_1"
    ZFP_OVER_F_MINUS_1 = "zfp_over_f_minus_1"


class Verdict(str, Enum):
    HOLDS_ON_GRID = "holds_on_grid"
    VIOLATED = "violated"


@dataclass(frozen=True)
class DiskGrid:
    """Polar grid strictly inside ``|z| < radius``."""

    radius: float
    n_radii: int = 64
    n_angles: int = 128
    spacing: Spacing = Spacing.UNIFORM_R_SQUARED

    def __post_init__(self):
        if not 0 < self.radius <= 1:
            raise DomainError(f"grid radius must lie in (0, 1], got {self.radius}")
        if self.n_radii < 1 or self.n_angles < 1:
            raise ValueError("grid needs at least one ring and one angle")
        object.__setattr__(self, "spacing", Spacing(self.spacing))

    def ring_radii(self) -> np.ndarray:
        k = np.arange(1, self.n_radii + 1) / self.n_radii
        if self.spacing is Spacing.UNIFORM_R_SQUARED:
            k = np.sqrt(k)
        return self.radius * (1 - RING_PULL_IN) * k

    def points(self) -> np.ndarray:
        """Ring-major array of ``n_radii * n_angles`` sample points."""
        theta = 2 * np.pi * np.arange(self.n_angles) / self.n_angles
        return (self.ring_radii()[:, None] * np.exp(1j * theta)[None, :]).ravel()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["spacing"] = self.spacing.value
        return d


@dataclass(frozen=True)
class MembershipReport:
    verdict: Verdict
    sup_modulus: float
    witness: complex
    grid: DiskGrid
    quantity: Quantity

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS_ON_GRID

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "sup_modulus": self.sup_modulus,
            "witness": [self.witness.real, self.witness.imag],
            "quantity": self.quantity.value,
            "grid": self.grid.to_dict(),
        }


def quantity_values(f: NormalizedFunction, quantity: Quantity, z: np.ndarray) -> np.ndarray:
    quantity = Quantity(quantity)
    if quantity is Quantity.U:
        return u_eval(f, z)
    fp = evaluate(derivative(f.series), z)
    if quantity is Quantity.F_PRIME_MINUS_1:
        return fp - 1
    over_z = evaluate(f.over_z(), z)
    if np.any(np.abs(over_z) < POLE_EPS):
        raise PoleAtSample("f(z)/z vanishes at a sample point")
    return fp / over_z - 1


def _argmax_deterministic(values: np.ndarray, z: np.ndarray) -> int:
    # ties broken by smallest (re, im) so the witness never depends on evaluation order
    top = np.flatnonzero(values == values.max())
    if top.size == 1:
        return int(top[0])
    order = np.lexsort((z[top].imag, z[top].real))
    return int(top[order[0]])


def check_on_disk(f: NormalizedFunction, quantity: Quantity, grid: DiskGrid) -> MembershipReport:
    """Sup of ``|quantity|`` over the grid; the verdict is violated iff sup >= 1."""
    quantity = Quantity(quantity)
    z = grid.points()
    mod = np.abs(quantity_values(f, quantity, z))
    if not np.all(np.isfinite(mod)):
        raise PoleAtSample("non-finite value on the grid")
    i = _argmax_deterministic(mod, z)
    sup = float(mod[i])
    verdict = Verdict.VIOLATED if sup >= 1 else Verdict.HOLDS_ON_GRID
    return MembershipReport(verdict, sup, complex(z[i]), grid, quantity)


class UnivalenceResult(NamedTuple):
    univalent: bool
    witness: tuple[complex, complex] | None


def _oracle_grid(radius: float, n_samples: int) -> DiskGrid:
    n_radii = max(4, int(round(math.sqrt(n_samples / 4))))
    n_angles = max(8, int(math.ceil(n_samples / n_radii)))
    return DiskGrid(radius, n_radii, n_angles, Spacing.UNIFORM_R)


def _deflated_newton(f: NormalizedFunction, fp_series: TruncatedSeries, z1: complex,
                     start: complex, max_iter: int = 60) -> complex | None:
    """Solve f(z) = f(z1) for z != z1 by Newton on (f(z) - f(z1))/(z - z1)."""
    target = evaluate(f.series, z1)
    z = start
    for _ in range(max_iter):
        dz0 = z - z1
        if abs(dz0) < SEPARATION_GUARD:
            return None
        F = evaluate(f.series, z) - target
        if abs(F) < 1e-15:
            return z
        Fp = evaluate(fp_series, z)
        denom = Fp / F - 1 / dz0
        if denom == 0 or not np.isfinite(denom):
            return None
        step = 1 / denom
        z = z - step
        if abs(z) > 1.5:
            return None
        if abs(step) < 1e-16 * max(1.0, abs(z)):
            break
    return z


def univalence_oracle(f: NormalizedFunction, radius: float,
                      n_samples: int = 10_000, max_candidates: int = 400) -> UnivalenceResult:
    """Search for z1 != z2 in ``|z| < radius`` with f(z1) = f(z2).

    Near-collisions on a grid are located with a k-d tree in the image plane and
    refined by deflated Newton.  A witness is returned only if it passes the
    collision test ``|f(z1) - f(z2)| < 1e-10`` with ``|z1 - z2| > 1e-6``, both points
    inside the disk.  No witness means none was found, not that f is univalent.
    """
    if not 0 < radius < 1:
        raise DomainError(f"oracle radius must lie in (0, 1), got {radius}")
    if n_samples < 100:
        raise ValueError("n_samples must be at least 100")
    z = _oracle_grid(radius, n_samples).points()
    w = evaluate(f.series, z)
    k = min(9, z.size)
    _, nbr = cKDTree(np.column_stack([w.real, w.imag])).query(
        np.column_stack([w.real, w.imag]), k=k)
    i = np.repeat(np.arange(z.size), k - 1)
    j = nbr[:, 1:].ravel()
    keep = i < j
    i, j = i[keep], j[keep]
    dz = np.abs(z[i] - z[j])
    ok = dz > SEPARATION_GUARD
    i, j, dz = i[ok], j[ok], dz[ok]
    if i.size == 0:
        return UnivalenceResult(True, None)
    score = np.abs(w[i] - w[j]) / dz
    fp_series = derivative(f.series)
    for c in np.argsort(score, kind="stable")[:max_candidates]:
        for a, b in ((i[c], j[c]), (j[c], i[c])):
            z1 = complex(z[a])
            z2 = _deflated_newton(f, fp_series, z1, complex(z[b]))
            if z2 is None or abs(z2) >= radius:
                continue
            if (abs(z1 - z2) > SEPARATION_GUARD
                    and abs(evaluate(f.series, z1) - evaluate(f.series, z2)) < COLLISION_TOL):
                return UnivalenceResult(False, (z1, z2))
    return UnivalenceResult(True, None)


@dataclass(frozen=True)
class SharpnessReport:
    """The extremal g1 = z + z**2/b and the three facts that make |a2|/2 sharp."""

    b: float
    g1: NormalizedFunction = field(repr=False)
    critical_point: float
    derivative_at_critical: complex
    u_report: MembershipReport
    oracle_radius: float
    oracle: UnivalenceResult | None
    transform_agreement: float

    @property
    def confirmed(self) -> bool:
        collision = self.oracle is None or not self.oracle.univalent
        return self.derivative_at_critical == 0 and self.u_report.holds and collision

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "critical_point": self.critical_point,
            "derivative_at_critical": [self.derivative_at_critical.real,
                                       self.derivative_at_critical.imag],
            "u_report": self.u_report.to_dict(),
            "oracle_radius": self.oracle_radius,
            "oracle_univalent": None if self.oracle is None else self.oracle.univalent,
            "witness": None if self.oracle is None or self.oracle.witness is None else
            [[p.real, p.imag] for p in self.oracle.witness],
            "transform_agreement": self.transform_agreement,
            "confirmed": self.confirmed,
        }


def f1_reciprocal(b: float, order: int = DEFAULT_ORDER) -> ReciprocalRep:
    """``z/f1(z) = 1 + b z + z**2``."""
    return ReciprocalRep.from_coeffs([1, b, 1], order=order)


def sharpness_f1(b: float, n_samples: int = 10_000, grid_factor: float = 0.999,
                 oracle_factor: float = 1.05, order: int = DEFAULT_ORDER) -> SharpnessReport:
    if not 0 < b <= 2:
        raise DomainError(f"b must lie in (0, 2], got {b}")
    g1 = NormalizedFunction.from_coeffs([0, 1, 1 / b])
    via_transform = g_transform(f1_reciprocal(b, order).to_function())
    agreement = g1.series.truncate(via_transform.order).max_abs_diff(via_transform.series)
    crit = -b / 2
    d_crit = evaluate(derivative(g1.series), crit)
    u_report = check_on_disk(g1, Quantity.U, DiskGrid(grid_factor * b / 2))
    r_out = oracle_factor * b / 2
    oracle = univalence_oracle(g1, r_out, n_samples) if r_out < 1 else None
    return SharpnessReport(b, g1, crit, d_crit, u_report, r_out, oracle, agreement)


def denominator_series(omega, a2: complex) -> TruncatedSeries:
    """``1 - a2 z - z omega(z)``."""
    w = omega.omega if isinstance(omega, SchwarzFunction) else omega
    d = -np.concatenate([[0.0], w.coeffs])
    d[0] += 1.0
    d[1] -= a2
    return TruncatedSeries(d)


def min_root_modulus(poly: TruncatedSeries) -> float:
    """Smallest root modulus of the polynomial; negligible top coefficients are dropped."""
    c = poly.coeffs
    big = np.abs(c) > 1e-15 * np.max(np.abs(c))
    c = c[:np.flatnonzero(big)[-1] + 1]
    if c.size <= 1:
        return math.inf
    return float(np.min(np.abs(np.roots(c[::-1]))))


def build_f_from_omega(omega, a2: complex, check_radius: float = 0.9) -> NormalizedFunction:
    """f with ``z/f(z) = 1 - a2 z - z omega(z)``.

    Raises ZeroDenominator when the (polynomial) right-hand side has a zero in
    ``|z| <= check_radius``: f would have a pole there.
    """
    if abs(a2) > 2 + 1e-12:
        raise DomainError(f"|a2| = {abs(a2)} exceeds 2")
    d = denominator_series(omega, a2)
    rho = min_root_modulus(d)
    if rho <= check_radius:
        raise ZeroDenominator(f"1 - a2 z - z omega(z) vanishes at |z| = {rho:.6g}")
    over_z = reciprocal(d).coeffs.copy()
    over_z[0] = 1.0
    return NormalizedFunction(TruncatedSeries(over_z).shift_up(1))


# random members ------------------------------------------------------------

def _random_phase(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))


def _random_disk(rng: np.random.Generator, radius: float = 1.0) -> complex:
    return radius * math.sqrt(rng.random()) * _random_phase(rng)


def mobius_schwarz(c: complex, rotation: complex = 1.0, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Series of ``rotation * z (z + c)/(1 + conj(c) z)`` (|c| < 1)."""
    n = np.arange(order)
    geo = (-np.conj(c)) ** n  # 1/(1 + conj(c) z)
    inner = c * geo
    inner[1:] += geo[:-1]
    return TruncatedSeries(np.concatenate([[0.0], rotation * inner]))


def random_schwarz(rng: np.random.Generator, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """A Schwarz function; about half the draws also satisfy ``|omega'| <= 1``."""
    kind = rng.integers(3)
    if kind == 0:
        return TruncatedSeries([0, _random_disk(rng)], order=order)
    if kind == 1:
        k = int(rng.integers(1, 6))
        c = np.array([_random_disk(rng) for _ in range(k)])
        weights = np.arange(1, k + 1) * np.abs(c)
        c *= rng.random() ** 0.25 / max(weights.sum(), 1e-300)
        return TruncatedSeries([0, *c], order=order)
    return mobius_schwarz(_random_disk(rng, 0.6), _random_phase(rng), order)


def in_class_u(omega: TruncatedSeries, grid: DiskGrid | None = None) -> bool:
    """f in U iff |omega'| <= 1 on the disk (U_f = z**2 omega' plus the Schwarz lemma)."""
    grid = grid or DiskGrid(0.99, 16, 64)
    z = np.concatenate([grid.points(), np.exp(2j * np.pi * np.arange(64) / 64)])
    return bool(np.max(np.abs(evaluate(derivative(omega), z))) <= 1 + 1e-12)


@dataclass(frozen=True, eq=False)
class ClassUMember:
    f: NormalizedFunction
    omega: TruncatedSeries
    a2: complex


def rotate_schwarz(omega: TruncatedSeries, rot: complex) -> TruncatedSeries:
    """``rot * omega(rot * z)``: the omega of the rotation e^{-it} f(e^{it} z)."""
    k = np.arange(omega.order + 1)
    return TruncatedSeries(omega.coeffs * rot ** (k + 1))


def random_class_u_member(rng: np.random.Generator, a2_range: tuple[float, float] = (0.0, 2.0),
                          order: int = DEFAULT_ORDER, max_tries: int = 200) -> ClassUMember:
    """f in U with ``lo < |a2| <= hi``, built from a random omega with |omega'| <= 1.

    In the frame where ``a2 = -A`` is real, omega is the blend
    ``-lam z + (1 - lam) omega_rand`` with ``lam >= A - 1`` (the blend keeps
    |omega'| <= 1); the result is then rotated.  Draws that would give f a pole
    in the unit disk are rejected, and after ``max_tries`` rejections the blend
    falls back to ``lam = 1``-free linear omega ``-s z`` with s in [A - 1, 1],
    whose denominator ``1 + A z + s z**2`` has no zero in the disk.
    """
    lo, hi = a2_range
    A = lo + (hi - lo) * (1 - rng.random())
    lam_lo = max(A - 1, 0.0)
    rot = _random_phase(rng)
    for _ in range(max_tries):
        lam = lam_lo + (1 - lam_lo) * rng.random()
        omega = -lam * TruncatedSeries.identity(order) + (1 - lam) * random_schwarz(rng, order)
        if not in_class_u(omega):
            continue
        omega, a2 = rotate_schwarz(omega, rot), -A * rot
        try:
            f = build_f_from_omega(omega, a2, check_radius=1 - RING_PULL_IN)
        except ZeroDenominator:
            continue
        return ClassUMember(f, omega, a2)
    s = lam_lo + (1 - lam_lo) * rng.random()
    omega = rotate_schwarz(TruncatedSeries([0, -s], order=order), rot)
    a2 = -A * rot
    return ClassUMember(build_f_from_omega(omega, a2, check_radius=0.0), omega, a2)


def random_splus_member(rng: np.random.Generator, order: int = DEFAULT_ORDER,
                        max_degree: int = 8, max_tries: int = 1000) -> ReciprocalRep:
    """z/f with b1 in (0, 2], b_n >= 0 and sum (n-1) b_n <= 1; no zero in the disk."""
    for _ in range(max_tries):
        deg = int(rng.integers(2, max_degree + 1))
        b = np.zeros(deg + 1)
        b[0] = 1.0
        b[1] = 2 * (1 - rng.random())
        tail = rng.random(deg - 1) * (rng.random(deg - 1) < 0.7)
        weights = np.arange(1, deg) * tail
        if weights.sum() > 0:
            b[2:] = tail * (rng.random() ** 0.25) / weights.sum()
        rep = ReciprocalRep.from_coeffs(b, order=order)
        if min_root_modulus(rep.b) > 1 - RING_PULL_IN:
            return rep
    raise RuntimeError("could not draw an S+ member without a pole")


def random_area_member(rng: np.random.Generator, order: int = DEFAULT_ORDER,
                       max_degree: int = 8, max_tries: int = 1000) -> ReciprocalRep:
    """z/f with complex b_n, 0 < |b1| <= 2 and sum (n-1)|b_n|**2 <= 1; no zero in the disk."""
    for _ in range(max_tries):
        deg = int(rng.integers(2, max_degree + 1))
        b = np.zeros(deg + 1, dtype=complex)
        b[0] = 1.0
        b[1] = 2 * (1 - rng.random()) * _random_phase(rng)
        tail = np.array([_random_disk(rng) for _ in range(deg - 1)])
        energy = np.sum(np.arange(1, deg) * np.abs(tail) ** 2)
        if energy > 0:
            b[2:] = tail * math.sqrt(rng.random() ** 0.5 / energy)
        rep = ReciprocalRep.from_coeffs(b, order=order)
        if min_root_modulus(rep.b) > 1 - RING_PULL_IN:
            return rep
    raise RuntimeError("could not draw an area-theorem member without a pole")


def random_lemma1_function(rng: np.random.Generator, max_degree: int = 10) -> NormalizedFunction:
    """Random polynomial f with ``sum n |a_n| <= 1``; a fifth of draws sit on the boundary."""
    deg = int(rng.integers(2, max_degree + 1))
    a = np.array([_random_disk(rng) for _ in range(deg - 1)])
    weight = np.sum(np.arange(2, deg + 1) * np.abs(a))
    level = 1.0 if rng.random() < 0.2 else rng.random()
    return NormalizedFunction.from_tail(a * level / weight)
