"""Radii and thresholds defined implicitly by a scalar root equation.

All solvers return a :class:`RadiusResult` carrying the root, the final
bracket, the residual of the defining function at the root, and the number
of iterations spent.

The smallest positive root of the degree-8 threshold polynomial in
:func:`eta0` is located by scanning ``(0, 1)`` at step ``h = 1e-4`` before
bracketing. A pair of roots can only hide between two nodes if the polynomial
stays within ``h**2/8 * max|P''|`` of zero at those nodes (the chord error of
linear interpolation). For ``0 < gamma < 1`` every coefficient is at most 16
in magnitude and ``sum k(k-1)|c_k| < 830``, so that bound is about ``1e-6``;
nodes that close to zero are re-examined with a bounded 1-d minimization
before the first sign change is accepted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from . import generators as gen
from .errors import ConvergenceError, HypothesisError, NoSignChangeError, ParameterError

EPS = np.finfo(float).eps
DEFAULT_TOL = 1e-12
DEFAULT_XTOL = 1e-10
BOHR_ALPHA_MAX = 3 - 2 * math.sqrt(2)
ETA0_STEP = 1e-4


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    note: str = ""

    def as_row(self) -> dict:
        return {
            "value": self.value,
            "bracket_lo": self.bracket[0],
            "bracket_hi": self.bracket[1],
            "residual": self.residual,
            "iterations": self.iterations,
        }


def solve_bracketed(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    xtol: float = DEFAULT_XTOL,
    maxiter: int = 200,
) -> RadiusResult:
    """Brent's method on ``[a, b]``.

    Stops once ``|f(root)| <= tol`` and the bracket is no wider than ``xtol``.
    If the bracket is already narrow but the residual is not yet small, the
    search continues down to machine resolution before giving up.

    Raises:
        NoSignChangeError: ``f(a)`` and ``f(b)`` share a sign (even if a root
            of even multiplicity lies between them).
        ConvergenceError: ``maxiter`` exhausted, or the bracket collapsed to
            adjacent floats with the residual still above ``tol``.
    """
    fa, fb = float(f(a)), float(f(b))
    if not (math.isfinite(fa) and math.isfinite(fb)):
        raise ValueError(f"function is not finite at the bracket ends: f({a})={fa}, f({b})={fb}")
    if fa == 0:
        return RadiusResult(a, (a, a), 0.0, 0)
    if fb == 0:
        return RadiusResult(b, (b, b), 0.0, 0)
    if math.copysign(1, fa) == math.copysign(1, fb):
        raise NoSignChangeError(f"no sign change on [{a}, {b}]: f(a)={fa:.6g}, f(b)={fb:.6g}")

    c, fc = a, fa
    d = e = b - a
    for it in range(1, maxiter + 1):
        if math.copysign(1, fb) == math.copysign(1, fc):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        xm = 0.5 * (c - b)
        width = abs(c - b)
        done_x = width <= xtol
        if fb == 0 or (abs(fb) <= tol and done_x):
            return RadiusResult(b, (min(b, c), max(b, c)), fb, it)
        tol1 = 2 * EPS * abs(b) + (0.5 * xtol if not done_x else 0.0)
        if abs(xm) <= 2 * EPS * abs(b) + 1e-300:
            if abs(fb) <= tol:
                return RadiusResult(b, (min(b, c), max(b, c)), fb, it)
            raise ConvergenceError(f"bracket collapsed at {b!r} with residual {fb:.3g} > {tol:.3g}")
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p, q = 2 * xm * s, 1 - s
            else:
                q_, r_ = fa / fc, fb / fc
                p = s * (2 * xm * q_ * (q_ - r_) - (b - a) * (r_ - 1))
                q = (q_ - 1) * (r_ - 1) * (s - 1)
            if p > 0:
                q = -q
            p = abs(p)
            if 2 * p < min(3 * xm * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = xm
        else:
            d = e = xm
        a, fa = b, fb
        b = b + d if abs(d) > tol1 else b + math.copysign(max(tol1, 2 * EPS * abs(b)), xm)
        fb = float(f(b))
    raise ConvergenceError(f"no convergence within {maxiter} iterations (last residual {fb:.3g})")


# ---------------------------------------------------------------------------
# Bohr radius for the Booth family


def _booth_growth_factor(alpha: float) -> Callable[[float], float]:
    s = math.sqrt(alpha)
    return lambda r: math.exp(math.atanh(s * r) / s)


def bohr_equation(alpha: float) -> Callable[[float], float]:
    """``T(r) = fhat(r) - (-fhat(-1))`` for the Booth extremal ``fhat``.

    Its positive root is the radius below which the majorant of any
    subordinate series stays inside the covering disk.
    """
    _check_bohr_alpha(alpha)
    factor = _booth_growth_factor(alpha)
    s = math.sqrt(alpha)
    koebe = ((1 - s) / (1 + s)) ** (1 / (2 * s))
    return lambda r: r * factor(r) - koebe


def _check_bohr_alpha(alpha: float) -> None:
    if not 0 <= alpha < 1:
        raise ParameterError(f"alpha must lie in [0,1), got {alpha}")
    if not 0 < alpha <= BOHR_ALPHA_MAX * (1 + 1e-12):
        raise HypothesisError(f"the Bohr radius is established only for 0 < alpha <= 3-2*sqrt(2), got {alpha}")


def bohr_radius_booth(alpha: float, tol: float = DEFAULT_TOL, xtol: float = DEFAULT_XTOL) -> RadiusResult:
    """Root of :func:`bohr_equation` on ``(0, 1/3)``.

    Also samples ``T'`` on the bracket to confirm ``T`` is increasing there.
    """
    T = bohr_equation(alpha)
    res = solve_bracketed(T, 0.0, 1.0 / 3.0, tol=tol, xtol=xtol)
    factor = _booth_growth_factor(alpha)
    grid = np.linspace(0.0, 1.0 / 3.0, 257)
    deriv = np.array([factor(r) * (1 + r / (1 - alpha * r * r)) for r in grid])
    if not np.all(deriv > 0):
        raise ConvergenceError("T is not increasing on [0, 1/3]; the root need not be unique")
    return RadiusResult(res.value, res.bracket, res.residual, res.iterations, "T increasing on [0,1/3] (sampled)")


# ---------------------------------------------------------------------------
# eta0: smallest positive root of the degree-8 threshold polynomial


def eta0_coefficients(gamma: float) -> np.ndarray:
    """Coefficients ``c_0..c_8`` (ascending powers of eta)."""
    g = gamma
    return np.array([1 - g, 0.0, 3 * g - 10, 12.0, 8 - 3 * g, -16.0, 2 + g, 4.0, -1.0])


def eta0_polynomial(gamma: float) -> Callable:
    c = eta0_coefficients(gamma)[::-1]
    return lambda eta: np.polyval(c, eta)


def eta0(gamma: float, tol: float = DEFAULT_TOL, xtol: float = DEFAULT_XTOL, step: float = ETA0_STEP) -> RadiusResult:
    """Smallest root in ``(0, 1)`` of the threshold polynomial, for ``0 < gamma < 1``."""
    if not 0 < gamma < 1:
        raise HypothesisError(f"the threshold polynomial is used only for 0 < gamma < 1, got {gamma}")
    P = eta0_polynomial(gamma)
    coeffs = eta0_coefficients(gamma)
    k = np.arange(coeffs.size)
    curvature = float(np.sum(k * (k - 1) * np.abs(coeffs)))
    slack = step * step / 8 * curvature

    nodes = np.arange(1, round(1 / step)) * step
    vals = P(nodes)
    changes = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    limit = changes[0] if changes.size else nodes.size - 1
    bracket = None
    for i in np.nonzero(np.abs(vals[: limit + 1]) <= slack)[0]:
        lo, hi = nodes[max(i - 1, 0)], nodes[min(i + 1, nodes.size - 1)]
        sign = np.sign(vals[i]) or 1.0
        probe = minimize_scalar(lambda x: sign * P(x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-14})
        if sign * probe.fun < 0:
            bracket = (lo, float(probe.x))
            break
    if bracket is None:
        if not changes.size:
            raise NoSignChangeError(
                f"no root in (0,1) for gamma={gamma}: P(0+)={vals[0]:.6g}, P(1-)={vals[-1]:.6g}"
            )
        bracket = (nodes[changes[0]], nodes[changes[0] + 1])
    res = solve_bracketed(lambda x: float(P(x)), *bracket, tol=tol, xtol=xtol)
    lo, hi = res.bracket
    return RadiusResult(float(res.value), (float(lo), float(hi)), float(res.residual), res.iterations, f"scan step {step:g}")


# ---------------------------------------------------------------------------
# starlikeness radius


def starlikeness_radius(gamma: float, eta: float, order: float = 0.0) -> RadiusResult:
    """Smallest positive root of ``(1-a) eta^2 r^2 - (2(1-a) eta + gamma) r + (1-a) = 0``, ``a = order``.

    Uses the cancellation-free root ``2c / (b + sqrt(b^2 - 4ac))``; with
    ``eta = 0`` this reduces to the linear root. A root beyond 1 is clamped
    to 1 and noted (starlike of that order in the whole disk).
    """
    if not gamma > 0:
        raise ParameterError(f"gamma must be positive, got {gamma}")
    if not 0 <= eta < 1:
        raise ParameterError(f"eta must lie in [0,1), got {eta}")
    if not 0 <= order < 1:
        raise ParameterError(f"order must lie in [0,1), got {order}")
    c = 1 - order
    quad_a = c * eta * eta
    b = 2 * c * eta + gamma
    root = 2 * c / (b + math.sqrt(b * b - 4 * quad_a * c))
    residual = quad_a * root * root - b * root + c
    if root > 1:
        return RadiusResult(1.0, (1.0, 1.0), residual, 0, f"clamped: root {root:.15g} lies outside the disk")
    return RadiusResult(root, (root, root), residual, 0)


# ---------------------------------------------------------------------------
# convexity threshold of z/(1 + eta z)^2


def modkoebe_convexity(eta: float, grid: int = gen.DEFAULT_GRID) -> float:
    """Convexity margin of ``z/(1 + eta z)^2`` on the unit circle."""
    return gen.convexity_margin(gen.modkoebe(1.0, eta), grid)


def convexity_threshold_modkoebe(tol: float = DEFAULT_TOL, xtol: float = DEFAULT_XTOL) -> RadiusResult:
    """The ``eta`` where the convexity margin of ``z/(1+eta z)^2`` crosses zero."""
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return solve_bracketed(modkoebe_convexity, 0.1, 0.9, tol=tol, xtol=xtol)
