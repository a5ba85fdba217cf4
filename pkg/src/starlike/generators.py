"""The generator functions ``psi`` with ``psi(0) = 0`` that define each class.

A class member ``f`` satisfies ``z f'(z)/f(z) - 1 = psi(omega(z))`` for some
Schwarz function ``omega``. This module evaluates each ``psi`` (with its first
two derivatives), expands it as a power series, locates the extremes of
``Re psi`` on circles, builds the extremal function
``f0(z) = z exp(int_0^z psi(t)/t dt)``, and decides membership in the image
region ``1 + psi(disk)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, NamedTuple, Optional

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import spence

from .errors import ParameterError
from .schwarz import SchwarzSpec
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    series_compose,
    series_exp,
    series_integrate_quotient,
    series_mul,
    series_reciprocal,
)

DEFAULT_GRID = 4096
CONVEXITY_THRESHOLD = 2 - math.sqrt(3)
# below this the closed forms switch to their exact small-parameter limits
SMALL_PARAM = 1e-8


class Family(str, Enum):
    BOOTH = "booth"
    CISSOID = "cissoid"
    MODKOEBE = "modkoebe"
    MOBIUS = "mobius"
    LINEAR = "linear"
    DILOG = "dilog"
    PARABOLA = "parabola"
    SECANT = "secant"


@dataclass(frozen=True)
class GeneratorSpec:
    """A generator family together with its real parameters.

    Unused parameters stay ``None``. Use the module-level constructors
    (:func:`booth`, :func:`cissoid`, ...) rather than building this directly.
    """

    family: Family
    alpha: Optional[float] = None
    beta: Optional[float] = None
    gamma: Optional[float] = None
    eta: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        _validate(self)

    @property
    def params(self) -> dict:
        return {k: getattr(self, k) for k in ("alpha", "beta", "gamma", "eta") if getattr(self, k) is not None}

    def label(self) -> str:
        inner = ", ".join(f"{k}={v:.15g}" for k, v in self.params.items())
        return f"{self.family.value}({inner})"

    def __call__(self, z):
        return evaluate(self, z)


_REQUIRED = {
    Family.BOOTH: ("alpha",),
    Family.CISSOID: ("beta",),
    Family.MODKOEBE: ("gamma", "eta"),
    Family.MOBIUS: ("alpha", "beta"),
    Family.LINEAR: ("eta",),
    Family.DILOG: (),
    Family.PARABOLA: (),
    Family.SECANT: ("beta",),
}


def _validate(spec: GeneratorSpec) -> None:
    fam = spec.family
    for name in ("alpha", "beta", "gamma", "eta"):
        value = getattr(spec, name)
        if name in _REQUIRED[fam]:
            if value is None:
                raise ParameterError(f"{fam.value} needs parameter {name}")
            if not math.isfinite(value):
                raise ParameterError(f"{name} must be finite, got {value}")
        elif value is not None:
            raise ParameterError(f"{fam.value} takes no parameter {name}")
    a, b, g, e = spec.alpha, spec.beta, spec.gamma, spec.eta
    if fam is Family.BOOTH and not 0 <= a < 1:
        raise ParameterError(f"alpha must lie in [0,1), got {a}")
    if fam is Family.CISSOID and not 0 <= b < 1:
        raise ParameterError(f"beta must lie in [0,1), got {b}")
    if fam is Family.MODKOEBE:
        if not 0 <= e < 1:
            raise ParameterError(f"eta must lie in [0,1), got {e}")
        if not g > 0:
            raise ParameterError(f"gamma must be positive, got {g}")
    if fam is Family.MOBIUS:
        if not 0 < a < 1:
            raise ParameterError(f"alpha must lie in (0,1), got {a}")
        if not b > 0:
            raise ParameterError(f"beta must be positive, got {b}")
    if fam is Family.LINEAR and not e > 0:
        raise ParameterError(f"eta must be positive, got {e}")
    if fam is Family.SECANT and not 0 <= b <= 1:
        raise ParameterError(f"beta must lie in [0,1], got {b}")


def booth(alpha: float) -> GeneratorSpec:
    """Booth lemniscate ``z / (1 - alpha z^2)``."""
    return GeneratorSpec(Family.BOOTH, alpha=float(alpha))


def cissoid(beta: float) -> GeneratorSpec:
    """Cissoid of Diocles ``z / ((1 - z)(1 + beta z))``."""
    return GeneratorSpec(Family.CISSOID, beta=float(beta))


def modkoebe(gamma: float, eta: float) -> GeneratorSpec:
    """Scaled modified Koebe function ``gamma z / (1 + eta z)^2``."""
    return GeneratorSpec(Family.MODKOEBE, gamma=float(gamma), eta=float(eta))


def mobius(alpha: float, beta: float) -> GeneratorSpec:
    """``beta z / (1 + alpha z)``."""
    return GeneratorSpec(Family.MOBIUS, alpha=float(alpha), beta=float(beta))


def linear(eta: float) -> GeneratorSpec:
    """``eta z``."""
    return GeneratorSpec(Family.LINEAR, eta=float(eta))


def dilog() -> GeneratorSpec:
    """``log(1 - z)``; its extremal function involves the dilogarithm."""
    return GeneratorSpec(Family.DILOG)


def parabola() -> GeneratorSpec:
    """``-(log((1 + sqrt z)/(1 - sqrt z)))^2``, so that ``1 + psi`` maps onto a parabolic region."""
    return GeneratorSpec(Family.PARABOLA)


def secant(beta: float) -> GeneratorSpec:
    """``z / cos(beta z)``."""
    return GeneratorSpec(Family.SECANT, beta=float(beta))


def from_params(family: str, **params) -> GeneratorSpec:
    """Build a spec from a family name and keyword parameters, ignoring ``None`` values."""
    return GeneratorSpec(Family(family), **{k: float(v) for k, v in params.items() if v is not None})


# ---------------------------------------------------------------------------
# pointwise evaluation


def _atanh_sqrt_ratio(z):
    """``artanh(sqrt z)/sqrt z``; even in ``sqrt z`` so the branch choice is irrelevant."""
    z = np.asarray(z, dtype=complex)
    s = np.sqrt(z)
    small = np.abs(z) < 1e-8
    safe_s = np.where(small, 0.5, s)
    return np.where(small, 1 + z / 3 + z * z / 5, np.arctanh(safe_s) / safe_s)


def _psi(spec: GeneratorSpec, z):
    fam = spec.family
    if fam is Family.BOOTH:
        return z / (1 - spec.alpha * z * z)
    if fam is Family.CISSOID:
        return z / ((1 - z) * (1 + spec.beta * z))
    if fam is Family.MODKOEBE:
        return spec.gamma * z / (1 + spec.eta * z) ** 2
    if fam is Family.MOBIUS:
        return spec.beta * z / (1 + spec.alpha * z)
    if fam is Family.LINEAR:
        return spec.eta * z
    if fam is Family.DILOG:
        return np.log(1 - z)
    if fam is Family.PARABOLA:
        return -4 * z * _atanh_sqrt_ratio(z) ** 2
    return z / np.cos(spec.beta * z)


def _dpsi(spec: GeneratorSpec, z):
    fam = spec.family
    if fam is Family.BOOTH:
        a = spec.alpha
        return (1 + a * z * z) / (1 - a * z * z) ** 2
    if fam is Family.CISSOID:
        b = spec.beta
        return (1 / (1 - z) ** 2 + b / (1 + b * z) ** 2) / (1 + b)
    if fam is Family.MODKOEBE:
        e = spec.eta
        return spec.gamma * (1 - e * z) / (1 + e * z) ** 3
    if fam is Family.MOBIUS:
        return spec.beta / (1 + spec.alpha * z) ** 2
    if fam is Family.LINEAR:
        return np.full_like(np.asarray(z, dtype=complex), spec.eta)
    if fam is Family.DILOG:
        return -1 / (1 - z)
    if fam is Family.PARABOLA:
        return -4 * _atanh_sqrt_ratio(z) / (1 - z)
    b = spec.beta
    sec = 1 / np.cos(b * z)
    return sec + b * z * sec * np.tan(b * z)


def _d2psi(spec: GeneratorSpec, z):
    fam = spec.family
    if fam is Family.BOOTH:
        a = spec.alpha
        return 2 * a * z * (3 + a * z * z) / (1 - a * z * z) ** 3
    if fam is Family.CISSOID:
        b = spec.beta
        return (2 / (1 - z) ** 3 - 2 * b * b / (1 + b * z) ** 3) / (1 + b)
    if fam is Family.MODKOEBE:
        e = spec.eta
        return spec.gamma * (2 * e * e * z - 4 * e) / (1 + e * z) ** 4
    if fam is Family.MOBIUS:
        a = spec.alpha
        return -2 * a * spec.beta / (1 + a * z) ** 3
    if fam is Family.LINEAR:
        return np.zeros_like(np.asarray(z, dtype=complex))
    if fam is Family.DILOG:
        return -1 / (1 - z) ** 2
    if fam is Family.PARABOLA:
        ratio = _atanh_sqrt_ratio(z)
        # d/dz of artanh(sqrt z)/sqrt z, with its value 1/3 at the origin
        small = np.abs(z) < 1e-8
        safe_z = np.where(small, 1.0, z)
        dratio = np.where(small, 1 / 3 + 2 * z / 5, (1 / (1 - z) - ratio) / (2 * safe_z))
        return -4 * (dratio / (1 - z) + ratio / (1 - z) ** 2)
    b = spec.beta
    sec = 1 / np.cos(b * z)
    tan = np.tan(b * z)
    return 2 * b * sec * tan + b * b * z * (sec * tan * tan + sec**3)


def derivative_at_zero(spec: GeneratorSpec) -> float:
    """``psi'(0)``; the value of ``psi(t)/t`` at ``t = 0``."""
    return float(np.real(_dpsi(spec, np.complex128(0))))


def has_boundary_singularity(spec: GeneratorSpec) -> bool:
    """True when ``psi`` blows up somewhere on the unit circle."""
    return spec.family in (Family.CISSOID, Family.DILOG, Family.PARABOLA)


def evaluate(spec: GeneratorSpec, z):
    """``psi(z)`` for ``|z| < 1`` (scalar or array)."""
    z = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(z)):
        raise ValueError("evaluation point contains NaN or infinite entries")
    if np.any(np.abs(z) >= 1):
        raise ValueError(f"psi is evaluated on the open unit disk only, got |z| = {np.max(np.abs(z)):.6g}")
    out = _psi(spec, z)
    if not np.all(np.isfinite(out)):
        raise ArithmeticError(f"{spec.label()} hit a pole inside the unit disk")
    return out[()] if out.ndim == 0 else out


def evaluate_derivatives(spec: GeneratorSpec, z):
    """``(psi'(z), psi''(z))`` on the closed disk where the family is analytic."""
    z = np.asarray(z, dtype=complex)
    return _dpsi(spec, z), _d2psi(spec, z)


def psi_series(spec: GeneratorSpec, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor expansion of ``psi`` about 0, truncated to ``order`` terms."""
    n = np.arange(order, dtype=float)
    c = np.zeros(order, dtype=complex)
    fam = spec.family
    if fam is Family.BOOTH:
        odd = n[1::2]
        c[1::2] = spec.alpha ** ((odd - 1) / 2)
    elif fam is Family.CISSOID:
        b = spec.beta
        c[1:] = (1 - (-b) ** n[1:]) / (1 + b)
    elif fam is Family.MODKOEBE:
        c[1:] = spec.gamma * n[1:] * (-spec.eta) ** (n[1:] - 1)
    elif fam is Family.MOBIUS:
        c[1:] = spec.beta * (-spec.alpha) ** (n[1:] - 1)
    elif fam is Family.LINEAR:
        if order > 1:
            c[1] = spec.eta
    elif fam is Family.DILOG:
        c[1:] = -1 / n[1:]
    elif fam is Family.PARABOLA:
        ratio = PowerSeries(1 / (2 * n + 1))
        sq = series_mul(ratio, ratio).coeffs
        c[1:] = -4 * sq[:-1]
    else:
        b = spec.beta
        cos_c = np.zeros(order, dtype=complex)
        even = np.arange(0, order, 2)
        cos_c[even] = [(-1) ** (k // 2) * b**k / math.factorial(k) for k in even]
        sec = series_reciprocal(PowerSeries(cos_c)).coeffs
        c[1:] = sec[:-1]
    return PowerSeries(c)


# ---------------------------------------------------------------------------
# extremal functions


def log_extremal_quotient(spec: GeneratorSpec) -> Optional[Callable]:
    """Closed form of ``int_0^z psi(t)/t dt`` when one exists, else ``None``."""
    fam = spec.family
    if fam is Family.BOOTH:
        a = spec.alpha
        s = math.sqrt(a)
        if a < SMALL_PARAM:
            return lambda z: z + a * z**3 / 3 + a * a * z**5 / 5
        return lambda z: np.arctanh(s * z) / s
    if fam is Family.CISSOID:
        b = spec.beta
        return lambda z: (np.log(1 + b * z) - np.log(1 - z)) / (1 + b)
    if fam is Family.MODKOEBE:
        g, e = spec.gamma, spec.eta
        return lambda z: g * z / (1 + e * z)
    if fam is Family.MOBIUS:
        a, b = spec.alpha, spec.beta
        return lambda z: (b / a) * np.log1p(a * z)
    if fam is Family.LINEAR:
        e = spec.eta
        return lambda z: e * z
    if fam is Family.DILOG:
        return lambda z: -spence(1 - np.asarray(z, dtype=complex))
    if fam is Family.SECANT:
        b = spec.beta
        if b < SMALL_PARAM:
            return lambda z: z + b * b * z**3 / 6
        # log(sec w + tan w) = asinh(tan w)
        return lambda z: np.arcsinh(np.tan(b * np.asarray(z, dtype=complex))) / b
    return None


def extremal_closed_form(spec: GeneratorSpec) -> Optional[Callable]:
    """``f0(z) = z exp(int_0^z psi(t)/t dt)`` as a vectorized callable, if available."""
    log_q = log_extremal_quotient(spec)
    if log_q is None:
        return None

    def f0(z):
        z = np.asarray(z, dtype=complex)
        out = z * np.exp(log_q(z))
        return out[()] if out.ndim == 0 else out

    return f0


@dataclass(frozen=True, eq=False)
class MembershipSample:
    """A member ``f`` of the class of ``spec`` together with the witness that produced it."""

    f: PowerSeries
    witness: SchwarzSpec
    spec: GeneratorSpec
    closed_form: Optional[Callable] = field(default=None, repr=False)

    def __post_init__(self):
        if not self.f.is_normalized():
            raise ValueError("member series must be normalized: a_0 = 0, a_1 = 1")

    @property
    def order(self) -> int:
        return self.f.order


def member_series(spec: GeneratorSpec, omega: PowerSeries) -> PowerSeries:
    """``z exp(int_0^z psi(omega(t))/t dt)`` as a truncated series."""
    order = omega.order
    phi = series_compose(psi_series(spec, order), omega)
    q = series_exp(series_integrate_quotient(phi))
    shifted = np.zeros(order, dtype=complex)
    shifted[1:] = q.coeffs[:-1]
    return PowerSeries(shifted)


def extremal_function(spec: GeneratorSpec, order: int = DEFAULT_ORDER) -> MembershipSample:
    """The extremal member ``f0`` (identity witness), with its closed form when known."""
    f = member_series(spec, PowerSeries.monomial(1, order))
    return MembershipSample(f, SchwarzSpec.identity(), spec, extremal_closed_form(spec))


# ---------------------------------------------------------------------------
# real part of psi on circles


class RealPartExtremes(NamedTuple):
    min: float
    max: float
    exact: bool


def has_exact_extremes(spec: GeneratorSpec) -> bool:
    """True when ``min/max Re psi`` on ``|z| = r`` are known to sit at ``psi(-r)`` and ``psi(r)``."""
    fam = spec.family
    if fam in (Family.BOOTH, Family.CISSOID, Family.LINEAR, Family.MOBIUS):
        return True
    if fam is Family.MODKOEBE:
        return spec.eta <= CONVEXITY_THRESHOLD
    return False


def _refine(fun, theta: np.ndarray, idx: int, xatol: float = 1e-10) -> float:
    step = theta[1] - theta[0]
    lo, hi = theta[idx] - step, theta[idx] + step
    res = minimize_scalar(fun, bounds=(lo, hi), method="bounded", options={"xatol": xatol})
    return min(float(res.fun), float(fun(theta[idx])))


def scan_real_part(spec: GeneratorSpec, r: float, grid: int = DEFAULT_GRID, refine: bool = True) -> tuple[float, float]:
    """Grid scan of ``min/max Re psi(r e^{i theta})``, optionally refined by a bounded 1-d search."""
    theta = 2 * np.pi * np.arange(grid) / grid
    values = np.real(_psi(spec, r * np.exp(1j * theta)))
    i_min, i_max = int(np.argmin(values)), int(np.argmax(values))
    lo, hi = float(values[i_min]), float(values[i_max])
    if refine:
        re = lambda t: float(np.real(_psi(spec, r * np.exp(1j * t))))
        lo = min(lo, _refine(re, theta, i_min))
        hi = max(hi, -_refine(lambda t: -re(t), theta, i_max))
    return lo, hi


def real_part_extremes(spec: GeneratorSpec, r: float, grid: int = DEFAULT_GRID) -> RealPartExtremes:
    """``(min, max)`` of ``Re psi`` on ``|z| = r``.

    Families with a known placement return ``Re psi(-r)`` and ``Re psi(r)``
    (``exact=True``); the rest fall back to a refined grid scan.
    """
    if not 0 < r < 1:
        raise ValueError(f"r must lie in (0,1), got {r}")
    if has_exact_extremes(spec):
        if spec.family is Family.BOOTH:
            m = r / (1 - spec.alpha * r * r)
            return RealPartExtremes(-m, m, True)
        lo = float(np.real(_psi(spec, complex(-r))))
        hi = float(np.real(_psi(spec, complex(r))))
        return RealPartExtremes(lo, hi, True)
    lo, hi = scan_real_part(spec, r, grid)
    return RealPartExtremes(lo, hi, False)


def max_modulus(spec: GeneratorSpec, r: float, grid: int = DEFAULT_GRID) -> float:
    """Grid max of ``|psi|`` on ``|z| = r``."""
    theta = 2 * np.pi * np.arange(grid) / grid
    return float(np.max(np.abs(_psi(spec, r * np.exp(1j * theta)))))


# ---------------------------------------------------------------------------
# convexity


def _convexity_values(dpsi, d2psi, z):
    if np.any(np.abs(dpsi) < 1e-14):
        k = int(np.argmin(np.abs(dpsi)))
        raise ArithmeticError(f"derivative vanishes on the grid near z = {z.flat[k]:.6g}")
    return np.real(1 + z * d2psi / dpsi)


def convexity_margin(spec: GeneratorSpec, grid: int = DEFAULT_GRID, radius: Optional[float] = None) -> float:
    """``min_theta Re(1 + z psi''(z)/psi'(z))`` on the circle ``|z| = radius``.

    The modified Koebe family is examined on the unit circle itself (it is
    analytic there); other families default to ``radius = 0.99``. A
    nonnegative margin certifies convexity at grid resolution.
    """
    if radius is None:
        radius = 1.0 if spec.family is Family.MODKOEBE else 0.99
    if not 0 < radius <= 1 or (radius == 1 and has_boundary_singularity(spec)):
        raise ValueError(f"radius {radius} is not admissible for {spec.label()}")
    theta = 2 * np.pi * np.arange(grid) / grid
    z = radius * np.exp(1j * theta)
    d1, d2 = evaluate_derivatives(spec, z)
    return float(np.min(_convexity_values(d1, d2, z)))


def exp_modkoebe_convexity_margin(gamma: float, eta: float, grid: int = DEFAULT_GRID) -> float:
    """Convexity margin of ``F(z) = exp(gamma z/(1 + eta z)^2)`` on the unit circle.

    ``1 + zF''/F' = 1 + zK''/K' + gamma z K'`` with ``K = z/(1+eta z)^2``.
    """
    theta = 2 * np.pi * np.arange(grid) / grid
    z = np.exp(1j * theta)
    k1 = (1 - eta * z) / (1 + eta * z) ** 3
    k2 = (2 * eta * eta * z - 4 * eta) / (1 + eta * z) ** 4
    return float(np.min(_convexity_values(k1, k2 + gamma * k1 * k1, z)))


def dominant(spec: GeneratorSpec) -> Callable:
    """``f0(z)/z = exp(int_0^z psi(t)/t dt)`` as a vectorized callable."""
    log_q = log_extremal_quotient(spec)
    if log_q is None:
        raise ValueError(f"{spec.label()} has no closed-form extremal function")
    return lambda z: np.exp(log_q(np.asarray(z, dtype=complex)))


# ---------------------------------------------------------------------------
# regions and boundary curves


@dataclass(frozen=True)
class RegionSpec:
    """The image region ``1 + psi(disk)`` of a generator."""

    generator: GeneratorSpec

    @property
    def family(self) -> Family:
        return self.generator.family


def region_contains(region: RegionSpec, w: complex, grid: int = DEFAULT_GRID) -> bool:
    """Membership of ``w`` in ``1 + psi(disk)``.

    Mobius and linear generators use their disk inequalities; every other
    family goes through :func:`boundary_winding_contains`.
    """
    spec = region.generator
    w = complex(w)
    if spec.family is Family.MOBIUS:
        return abs(w - 1) < abs(spec.beta - spec.alpha * (w - 1))
    if spec.family is Family.LINEAR:
        return abs(w - 1) < spec.eta
    return boundary_winding_contains(spec, w, grid)


def boundary_curve(spec: GeneratorSpec, rho: float, samples: int) -> np.ndarray:
    """``[psi(rho e^{2 pi i k/samples}) for k in range(samples)]``."""
    if not 0 < rho <= 1:
        raise ValueError(f"rho must lie in (0,1], got {rho}")
    if rho == 1 and has_boundary_singularity(spec):
        raise ValueError(f"{spec.label()} has a pole on the unit circle; sample with rho < 1")
    if samples < 3:
        raise ValueError("need at least 3 samples")
    theta = 2 * np.pi * np.arange(samples) / samples
    out = _psi(spec, rho * np.exp(1j * theta))
    if not np.all(np.isfinite(out)):
        raise ArithmeticError(f"sampling {spec.label()} at rho={rho} crossed a pole")
    return out


def default_boundary_rho(spec: GeneratorSpec) -> float:
    return 0.999 if has_boundary_singularity(spec) else 1.0


def winding_numbers(curve: np.ndarray, points) -> np.ndarray:
    """Winding number of the closed polyline ``curve`` around each point."""
    pts = np.atleast_1d(np.asarray(points, dtype=complex))
    d = curve[None, :] - pts[:, None]
    turn = np.angle(np.roll(d, -1, axis=1) / d)
    return np.rint(turn.sum(axis=1) / (2 * np.pi)).astype(int)


def polyline_proximity(curve: np.ndarray, points) -> tuple[np.ndarray, np.ndarray]:
    """Distance from each point to the closed polyline, and the length of the nearest segment."""
    pts = np.atleast_1d(np.asarray(points, dtype=complex))
    a = curve[None, :]
    seg = np.roll(curve, -1)[None, :] - a
    rel = pts[:, None] - a
    t = np.clip(np.real(rel * np.conj(seg)) / np.maximum(np.abs(seg) ** 2, 1e-300), 0, 1)
    dist = np.abs(rel - t * seg)
    nearest = np.argmin(dist, axis=1)
    return dist[np.arange(pts.size), nearest], np.abs(seg[0, nearest])


def distance_to_polyline(curve: np.ndarray, points) -> np.ndarray:
    return polyline_proximity(curve, points)[0]


@lru_cache(maxsize=64)
def _cached_curve(spec: GeneratorSpec, rho: float, grid: int) -> np.ndarray:
    curve = 1 + boundary_curve(spec, rho, grid)
    curve.setflags(write=False)
    return curve


def boundary_winding_contains(spec: GeneratorSpec, w, grid: int = DEFAULT_GRID, rho: Optional[float] = None):
    """Numeric membership of ``w`` in ``1 + psi(disk)`` by winding number.

    The boundary is sampled at ``rho`` (just inside the unit circle for
    families with a boundary pole). Points closer to the sampled curve than
    the length of the nearest chord are ambiguous at this resolution and raise.
    Accepts a scalar (returns ``bool``) or an array (returns a bool array).
    """
    rho = default_boundary_rho(spec) if rho is None else rho
    curve = _cached_curve(spec, float(rho), int(grid))
    pts = np.asarray(w, dtype=complex)
    dist, chord = polyline_proximity(curve, pts)
    close = dist < chord
    if np.any(close):
        i = int(np.argmax(close))
        bad = np.atleast_1d(pts)[i]
        raise ValueError(f"point {bad:.6g} lies within {chord[i]:.3g} of the sampled boundary; membership is ambiguous")
    inside = np.abs(winding_numbers(curve, pts)) == 1
    return bool(inside[0]) if pts.ndim == 0 else inside
