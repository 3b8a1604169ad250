"""Truncated complex power series.

A :class:`TruncatedSeries` holds the coefficients ``c_0 .. c_N`` of a
polynomial approximation of an analytic function at the origin.  All
arithmetic is exact modulo ``z**(N+1)`` up to floating point rounding.  Mixed
orders are never padded: a binary operation returns the smaller order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ZeroConstantTerm

DEFAULT_ORDER = 64


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("coefficients must be a non-empty 1-d sequence")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients ``coeffs[n]`` of ``z**n`` for ``n = 0 .. order``."""

    coeffs: np.ndarray

    def __init__(self, coeffs: Iterable[complex], order: int | None = None):
        arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            # pad with zeros or cut to the requested order
            out = np.zeros(order + 1, dtype=complex)
            k = min(order + 1, arr.size)
            out[:k] = arr[:k]
            arr = out
        object.__setattr__(self, "coeffs", _frozen(arr))

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def constant(cls, c: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([c], order=order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series of ``z``."""
        return cls([0, 1], order=order)

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n]) if 0 <= n <= self.order else 0j

    def __len__(self) -> int:
        return self.coeffs.size

    def __repr__(self) -> str:
        shown = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        tail = ", ..." if self.order >= 6 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order=order)

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self.coeffs[:n] - other.coeffs[:n]) <= atol))

    def max_abs_diff(self, other: "TruncatedSeries") -> float:
        n = min(self.order, other.order) + 1
        return float(np.max(np.abs(self.coeffs[:n] - other.coeffs[:n])))

    # operator sugar over the module-level functions
    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, reciprocal(other))
        return TruncatedSeries(self.coeffs / complex(other))

    def __call__(self, z):
        return evaluate(self, z)

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**k``; the order grows by ``k`` (no information is lost)."""
        return TruncatedSeries(np.concatenate([np.zeros(k, dtype=complex), self.coeffs]))

    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by ``z**k``; the first ``k`` coefficients are discarded."""
        if k > self.order:
            raise ValueError("cannot divide a series of order %d by z**%d" % (self.order, k))
        return TruncatedSeries(self.coeffs[k:])

    def to_json(self) -> str:
        return json.dumps(to_literal(self))


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(complex(x), order=order)


@dataclass(frozen=True, eq=False)
class NormalizedFunction:
    """A series ``z + a2 z**2 + a3 z**3 + ...`` (normalized: f(0)=0, f'(0)=1)."""

    series: TruncatedSeries

    def __post_init__(self):
        c = self.series.coeffs
        if self.series.order < 1 or c[0] != 0 or c[1] != 1:
            raise ValueError("a normalized function needs coeffs[0] == 0 and coeffs[1] == 1")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex], order: int | None = None) -> "NormalizedFunction":
        return cls(TruncatedSeries(coeffs, order=order))

    @classmethod
    def from_tail(cls, tail: Sequence[complex], order: int | None = None) -> "NormalizedFunction":
        """Build ``z + tail[0] z**2 + tail[1] z**3 + ...``."""
        return cls(TruncatedSeries([0, 1, *tail], order=order))

    @property
    def a2(self) -> complex:
        return self.series[2]

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def coeffs(self) -> np.ndarray:
        return self.series.coeffs

    def __call__(self, z):
        return evaluate(self.series, z)

    def over_z(self) -> TruncatedSeries:
        """Series of f(z)/z (constant term 1)."""
        return self.series.shift_down(1)

    def __repr__(self) -> str:
        return f"NormalizedFunction({self.series!r})"


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order) + 1
    return TruncatedSeries(a.coeffs[:n] + b.coeffs[:n])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order) + 1
    return TruncatedSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Series ``r`` with ``a * r == 1`` modulo ``z**(order+1)``."""
    c = a.coeffs
    if abs(c[0]) == 0:
        raise ZeroConstantTerm("reciprocal of a series with zero constant term")
    n = c.size
    r = np.zeros(n, dtype=complex)
    r[0] = 1 / c[0]
    for k in range(1, n):
        # c_0 r_k = -sum_{j=1..k} c_j r_{k-j}
        r[k] = -np.dot(c[1:k + 1], r[k - 1::-1]) / c[0]
    return TruncatedSeries(r)


def derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        return TruncatedSeries([0])
    n = np.arange(1, a.order + 1)
    return TruncatedSeries(a.coeffs[1:] * n)


def evaluate(a: TruncatedSeries, z):
    """Horner evaluation at a scalar or an array of points."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for c in a.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc) if acc.ndim == 0 else acc


def scale_argument(a, r: float):
    """Dilate the argument: ``a(r z)`` for raw series, ``f(r z)/r`` for normalized ones."""
    if not 0 < r <= 1:
        raise DomainError(f"dilation factor must lie in (0, 1], got {r}")
    if isinstance(a, NormalizedFunction):
        powers = float(r) ** np.arange(-1, a.order)
        powers[0] = 0.0
        out = a.coeffs * powers
        out[1] = 1.0
        return NormalizedFunction(TruncatedSeries(out))
    powers = float(r) ** np.arange(a.order + 1)
    return TruncatedSeries(a.coeffs * powers)


def to_literal(a) -> list[list[float]]:
    """JSON-ready ``[[re, im], ...]`` list, index = power of z."""
    if isinstance(a, NormalizedFunction):
        a = a.series
    return [[float(c.real) + 0.0, float(c.imag) + 0.0] for c in a.coeffs]


def from_literal(data, order: int | None = None) -> TruncatedSeries:
    """Parse the ``[[re, im], ...]`` literal (a JSON string or an already decoded list)."""
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    if not isinstance(data, list) or not data:
        raise ValueError("series literal must be a non-empty JSON array")
    coeffs = []
    for item in data:
        if isinstance(item, (int, float)) and not isinstance(item, bool):
            coeffs.append(complex(item))
            continue
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)):
            raise ValueError(f"bad coefficient entry {item!r}; expected [re, im]")
        coeffs.append(complex(item[0], item[1]))
    return TruncatedSeries(coeffs, order=order)
