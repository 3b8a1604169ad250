"""Seeded end-to-end checks of the radius theorems on random class members."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .analysis import g_transform
from .radii import radius_half_a2, radius_theorem1, radius_theorem3
from .verify import (
    DiskGrid,
    Quantity,
    check_on_disk,
    random_area_member,
    random_class_u_member,
    random_lemma1_function,
    random_splus_member,
)

GRID_FACTOR = 0.999


@dataclass
class SuiteResult:
    name: str
    seed: int
    members: int = 0
    violations: int = 0
    worst_sup: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.members > 0 and self.violations == 0

    def record(self, report) -> None:
        self.worst_sup = max(self.worst_sup, report.sup_modulus)
        if not report.holds:
            self.violations += 1
            self.failures.append(report.to_dict())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _grid(radius: float, n_radii: int, n_angles: int) -> DiskGrid:
    return DiskGrid(GRID_FACTOR * radius, n_radii, n_angles)


def theorem1_suite(n: int = 50, seed: int = 0, n_radii: int = 64, n_angles: int = 128) -> SuiteResult:
    """f in U with 5/4 <= |a2| <= 2: g satisfies |U_g| < 1 below the closed-form radius."""
    rng = np.random.default_rng(seed)
    out = SuiteResult("theorem1", seed)
    for _ in range(n):
        out.members += 1
        m = random_class_u_member(rng, (1.25, 2.0))
        r = radius_theorem1(abs(m.a2)).value
        out.record(check_on_disk(g_transform(m.f), Quantity.U, _grid(r, n_radii, n_angles)))
    return out


def theorem2_suite(n: int = 50, seed: int = 0, n_radii: int = 64, n_angles: int = 128) -> SuiteResult:
    """f in S+: g satisfies |U_g| < 1 on |z| < |a2|/2."""
    rng = np.random.default_rng(seed)
    out = SuiteResult("theorem2", seed)
    for _ in range(n):
        out.members += 1
        f = random_splus_member(rng).to_function()
        r = radius_half_a2(abs(f.a2)).value
        out.record(check_on_disk(g_transform(f), Quantity.U, _grid(r, n_radii, n_angles)))
    return out


def theorem3_suite(n: int = 50, seed: int = 0, n_radii: int = 64, n_angles: int = 128) -> SuiteResult:
    """f with sum (n-1)|b_n|^2 <= 1: g satisfies |U_g| < 1 below the root of eq11_lhs = |a2|^2."""
    rng = np.random.default_rng(seed)
    out = SuiteResult("theorem3", seed)
    for _ in range(n):
        out.members += 1
        f = random_area_member(rng).to_function()
        r = radius_theorem3(abs(f.a2)).value
        out.record(check_on_disk(g_transform(f), Quantity.U, _grid(r, n_radii, n_angles)))
    return out


def theorem_a_suite(n: int = 50, seed: int = 0, n_radii: int = 64, n_angles: int = 128) -> SuiteResult:
    """f in U: |g' - 1| < 1 and |z g'/g - 1| < 1 on |z| < |a2|/2; also |U_g| < 1 there when |a2| <= 1."""
    rng = np.random.default_rng(seed)
    out = SuiteResult("theoremA", seed)
    for _ in range(n):
        out.members += 1
        m = random_class_u_member(rng, (0.0, 2.0))
        g = g_transform(m.f)
        grid = _grid(radius_half_a2(abs(m.a2)).value, n_radii, n_angles)
        out.record(check_on_disk(g, Quantity.F_PRIME_MINUS_1, grid))
        out.record(check_on_disk(g, Quantity.ZFP_OVER_F_MINUS_1, grid))
        if abs(m.a2) <= 1:
            out.record(check_on_disk(g, Quantity.U, grid))
    return out


def lemma1_suite(n: int = 100, seed: int = 0, radius: float = 0.99,
                 n_radii: int = 64, n_angles: int = 128) -> SuiteResult:
    """sum n|a_n| <= 1 implies all three inequalities on the disk."""
    rng = np.random.default_rng(seed)
    out = SuiteResult("lemma1", seed)
    grid = DiskGrid(radius, n_radii, n_angles)
    for _ in range(n):
        out.members += 1
        f = random_lemma1_function(rng)
        out.record(check_on_disk(f, Quantity.U, grid))
        out.record(check_on_disk(f, Quantity.F_PRIME_MINUS_1, grid))
        out.record(check_on_disk(f, Quantity.ZFP_OVER_F_MINUS_1, grid))
    return out


SUITES = {
    "thm1": theorem1_suite,
    "thm2": theorem2_suite,
    "thm3": theorem3_suite,
    "thmA": theorem_a_suite,
    "lemma1": lemma1_suite,
}
