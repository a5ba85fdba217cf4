"""Truncated power series about the origin.

A :class:`PowerSeries` stores ``order`` complex coefficients, index ``n``
holding the coefficient of ``z**n``. All operations return new series
truncated to the common order; nothing mutates in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_ORDER = 64
# Horner evaluation is refused beyond this fraction of the disk of validity.
EVAL_RADIUS_FRACTION = 0.99


def _as_finite_complex(values, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{what} contains NaN or infinite entries")
    return arr


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Taylor coefficients ``coeffs[n]`` of ``z**n`` truncated at ``order`` terms.

    ``radius`` is the disk of validity used to cap evaluation; it defaults to
    the unit disk, which is where every series in this package lives.
    """

    coeffs: np.ndarray
    radius: float = 1.0

    def __post_init__(self):
        arr = _as_finite_complex(self.coeffs, "series coefficients").copy()
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must form a non-empty 1-d sequence")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex], order: int, radius: float = 1.0) -> PowerSeries:
        """Pad with zeros (or truncate) to exactly ``order`` terms."""
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        out = np.zeros(order, dtype=complex)
        src = np.asarray(coeffs, dtype=complex)[:order]
        out[: src.size] = src
        return cls(out, radius)

    @classmethod
    def monomial(cls, k: int, order: int, scale: complex = 1.0) -> PowerSeries:
        out = np.zeros(order, dtype=complex)
        if k < order:
            out[k] = scale
        return cls(out)

    @property
    def order(self) -> int:
        return self.coeffs.size

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries.from_coeffs(self.coeffs, order, self.radius)

    def is_real(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.coeffs.imag) < tol))

    def is_normalized(self, tol: float = 1e-12) -> bool:
        """True when the series has the form ``z + a_2 z^2 + ...``."""
        c = self.coeffs
        return self.order >= 2 and abs(c[0]) < tol and abs(c[1] - 1) < tol

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        _check_orders(self, other)
        return PowerSeries(self.coeffs + other.coeffs, min(self.radius, other.radius))

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        _check_orders(self, other)
        return PowerSeries(self.coeffs - other.coeffs, min(self.radius, other.radius))

    def scale(self, c: complex) -> PowerSeries:
        return PowerSeries(self.coeffs * c, self.radius)

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        return f"PowerSeries(order={self.order}, [{head}{', ...' if self.order > 6 else ''}])"


def _check_orders(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"mismatched truncation orders: {a.order} vs {b.order}")


def _require_zero_constant(a: PowerSeries, what: str) -> None:
    if abs(a.coeffs[0]) > 1e-14:
        raise ValueError(f"{what} requires a zero constant term, got {a.coeffs[0]}")


def evaluate(a: PowerSeries, z):
    """Horner evaluation at a scalar or array of points."""
    z = _as_finite_complex(z, "evaluation point")
    if np.any(np.abs(z) > EVAL_RADIUS_FRACTION * a.radius):
        raise ValueError(
            f"evaluation radius {np.max(np.abs(z)):.6g} exceeds "
            f"{EVAL_RADIUS_FRACTION} of the disk of validity ({a.radius})"
        )
    acc = np.zeros_like(z)
    for c in a.coeffs[::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the common order."""
    _check_orders(a, b)
    prod = np.convolve(a.coeffs, b.coeffs)[: a.order]
    return PowerSeries(prod, min(a.radius, b.radius))


def series_exp(a: PowerSeries) -> PowerSeries:
    """``exp(a)`` for a series with zero constant term.

    Uses ``n b_n = sum_{k=1}^n k a_k b_{n-k}``, which follows from ``b' = a' b``.
    """
    _require_zero_constant(a, "series_exp")
    n_terms = a.order
    ka = np.arange(n_terms) * a.coeffs
    b = np.zeros(n_terms, dtype=complex)
    b[0] = 1.0
    for n in range(1, n_terms):
        b[n] = np.dot(ka[1 : n + 1], b[n - 1 :: -1][:n]) / n
    return PowerSeries(b, a.radius)


def series_log(a: PowerSeries) -> PowerSeries:
    """Principal ``log(a)`` for a series with constant term 1."""
    if abs(a.coeffs[0] - 1) > 1e-14:
        raise ValueError(f"series_log requires constant term 1, got {a.coeffs[0]}")
    n_terms = a.order
    c = a.coeffs
    b = np.zeros(n_terms, dtype=complex)
    for n in range(1, n_terms):
        k = np.arange(1, n)
        b[n] = c[n] - np.dot(k * b[1:n], c[n - 1 : 0 : -1]) / n
    return PowerSeries(b, a.radius)


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    """``1/a`` for a series with nonzero constant term."""
    c = a.coeffs
    if abs(c[0]) < 1e-300:
        raise ValueError("series_reciprocal requires a nonzero constant term")
    out = np.zeros(a.order, dtype=complex)
    out[0] = 1.0 / c[0]
    for n in range(1, a.order):
        out[n] = -np.dot(c[1 : n + 1], out[n - 1 :: -1][:n]) / c[0]
    return PowerSeries(out, a.radius)


def series_integrate_quotient(a: PowerSeries) -> PowerSeries:
    """Termwise ``int_0^z a(t)/t dt``; coefficient ``n`` becomes ``a_n / n``."""
    _require_zero_constant(a, "series_integrate_quotient")
    out = np.zeros(a.order, dtype=complex)
    n = np.arange(1, a.order)
    out[1:] = a.coeffs[1:] / n
    return PowerSeries(out, a.radius)


def series_differentiate_quotient(a: PowerSeries) -> PowerSeries:
    """``z a'(z)``; the inverse of :func:`series_integrate_quotient`."""
    return PowerSeries(np.arange(a.order) * a.coeffs, a.radius)


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """Truncated ``outer(inner(z))``; ``inner`` must vanish at the origin."""
    _check_orders(outer, inner)
    _require_zero_constant(inner, "series_compose")
    n_terms = outer.order
    g = inner.coeffs
    acc = np.zeros(n_terms, dtype=complex)
    for c in outer.coeffs[::-1]:
        acc = np.convolve(acc, g)[:n_terms]
        acc[0] += c
    return PowerSeries(acc, min(outer.radius, inner.radius))


def majorant_sum(a: PowerSeries, r: float) -> float:
    """``sum_{n>=1} |a_n| r^n`` over the stored truncation."""
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    mags = np.abs(a.coeffs[1:])
    powers = r ** np.arange(1, a.order)
    return float(np.dot(mags, powers))
