"""Growth envelopes, covering radii, and the bounds that follow from them.

For ``f`` in the class of ``psi`` and ``|z| = r``,

    r exp(int_0^r m(t)/t dt) <= |f(z)| <= r exp(int_0^r M(t)/t dt),

where ``m(t)``, ``M(t)`` are the min and max of ``Re psi`` on ``|z| = t``.
When those sit at ``psi(-t)`` and ``psi(t)`` both ends are attained by the
extremal function ``f0`` and the envelope is sharp. Otherwise the envelope is
computed from grid-scanned extremes and flagged as heuristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize_scalar

from . import generators as gen
from .errors import ConvergenceError, HypothesisError
from .generators import Family, GeneratorSpec

QUAD_EPSABS = 1e-12
CROSS_CHECK_RTOL = 1e-9
KOEBE_SETTLE = 1e-10
KOEBE_MAX_STEPS = 52


class GrowthInterval(NamedTuple):
    lower: float
    upper: float
    sharp: bool
    discrepancy: float


@dataclass(frozen=True)
class GrowthBounds:
    r: float
    lower: float
    upper: float
    re_bound: float
    deriv_bound: float
    length_bound: float
    sharp: bool
    discrepancy: float

    def as_row(self) -> dict:
        return {
            "r": self.r,
            "lower": self.lower,
            "upper": self.upper,
            "re_bound": self.re_bound,
            "deriv_bound": self.deriv_bound,
            "length_bound": self.length_bound,
            "sharp": self.sharp,
            "discrepancy": self.discrepancy,
        }


def _integrate(fun, a: float, b: float) -> float:
    out = quad(fun, a, b, epsabs=QUAD_EPSABS, epsrel=1e-13, limit=200, full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3 or not math.isfinite(value):
        raise ConvergenceError(f"quadrature on [{a}, {b}] did not converge (error estimate {err:.3g})")
    return value


def _envelope_integrand(spec: GeneratorSpec, side: int):
    """``m(t)/t`` (side = -1) or ``M(t)/t`` (side = +1), with the limit at ``t = 0``."""
    d0 = gen.derivative_at_zero(spec)
    if gen.has_exact_extremes(spec):
        return lambda t: side * d0 if t == 0 else float(np.real(gen._psi(spec, complex(side * t)))) / t

    def scanned(t):
        if t == 0:
            return side * abs(d0)
        lo, hi = gen.scan_real_part(spec, t)
        return (hi if side > 0 else lo) / t

    return scanned


def log_envelope(spec: GeneratorSpec, r: float, side: int, start: float = 0.0) -> float:
    """``int_start^r m(t)/t dt`` or ``int_start^r M(t)/t dt`` by adaptive Gauss-Kronrod quadrature."""
    return _integrate(_envelope_integrand(spec, side), start, r)


@lru_cache(maxsize=512)
def growth_interval(spec: GeneratorSpec, r: float, rtol: float = CROSS_CHECK_RTOL) -> GrowthInterval:
    """Lower and upper bounds on ``|f(z)|`` over ``|z| = r`` for every ``f`` in the class.

    Sharp families are computed twice (quadrature and the extremal closed
    form) and must agree to ``rtol``; the relative gap is returned.

    Raises:
        ConvergenceError: quadrature failure or a cross-check gap above ``rtol``.
    """
    if not 0 < r < 1:
        raise ValueError(f"r must lie in (0,1), got {r}")
    lower = r * math.exp(log_envelope(spec, r, -1))
    upper = r * math.exp(log_envelope(spec, r, +1))
    f0 = gen.extremal_closed_form(spec)
    sharp = gen.has_exact_extremes(spec)
    if f0 is None:
        return GrowthInterval(lower, upper, sharp, math.nan)
    at_minus, at_plus = abs(f0(-r)), abs(f0(r))
    if sharp:
        gap = max(abs(lower - at_minus) / at_minus, abs(upper - at_plus) / at_plus)
        if gap > rtol:
            raise ConvergenceError(f"quadrature and closed form disagree by {gap:.3g} (relative) at r={r}")
    else:
        lo_cf, hi_cf = sorted((at_minus, at_plus))
        gap = max(abs(lower - lo_cf) / lo_cf, abs(upper - hi_cf) / hi_cf)
    return GrowthInterval(lower, upper, sharp, float(gap))


# ---------------------------------------------------------------------------
# covering radius


@dataclass(frozen=True)
class KoebeRadius:
    value: float
    numeric_limit: float
    limit_gap: float
    steps: int
    exact: bool

    def as_row(self) -> dict:
        return {
            "value": self.value,
            "numeric_limit": self.numeric_limit,
            "limit_gap": self.limit_gap,
            "steps": self.steps,
            "exact": self.exact,
        }


def koebe_limit(spec: GeneratorSpec, settle: float = KOEBE_SETTLE, max_steps: int = KOEBE_MAX_STEPS) -> KoebeRadius:
    """Covering radius ``lim_{r->1} lower(r)``, closed form plus numeric limit.

    The numeric sequence uses ``r_k = 1 - 2**-k`` and accumulates the lower
    envelope integral interval by interval; it is accepted once successive
    values differ by less than ``settle``. For families with a sharp envelope
    the reported value is ``-f0(-1)``; otherwise it is the numeric limit.
    """
    log_lower = 0.0
    prev_r, prev = 0.0, None
    current = math.nan
    for k in range(1, max_steps + 1):
        r_k = 1 - 2.0**-k
        log_lower += log_envelope(spec, r_k, -1, start=prev_r)
        current = r_k * math.exp(log_lower)
        if prev is not None and abs(current - prev) < settle:
            break
        prev_r, prev = r_k, current
    else:
        raise ConvergenceError(f"covering radius limit for {spec.label()} did not settle within {max_steps} steps")
    if gen.has_exact_extremes(spec):
        log_q = gen.log_extremal_quotient(spec)
        closed = math.exp(float(np.real(log_q(complex(-1.0)))))
        return KoebeRadius(closed, current, abs(closed - current), k, True)
    return KoebeRadius(current, current, 0.0, k, False)


def koebe_radius(spec: GeneratorSpec) -> float:
    """Radius of the disk about 0 covered by ``f(disk)`` for every member ``f``."""
    return koebe_limit(spec).value


# ---------------------------------------------------------------------------
# derivative, real part and arc length


def auxiliary_bounds(spec: GeneratorSpec, r: float, grid: int = gen.DEFAULT_GRID) -> GrowthBounds:
    """Upper bounds on ``Re f/z``, ``|f'|`` and the length of ``f(|z| = r)``.

    With ``M(r) = upper/r`` and ``P = max_{|z|=r} |psi|``, the bounds are
    ``M``, ``(1 + P) M`` and ``2 pi r (1 + P) M``. They are sharp when
    ``P = psi(r)``; if a grid scan shows ``|psi|`` peaks elsewhere the grid
    maximum is used and the result is marked non-sharp.
    """
    interval = growth_interval(spec, r)
    m = interval.upper / r
    psi_r = float(np.real(gen._psi(spec, complex(r))))
    grid_max = gen.max_modulus(spec, r, grid)
    hypothesis = psi_r >= grid_max * (1 - 1e-12)
    bound = psi_r if hypothesis else grid_max
    return GrowthBounds(
        r=r,
        lower=interval.lower,
        upper=interval.upper,
        re_bound=m,
        deriv_bound=(1 + bound) * m,
        length_bound=2 * math.pi * r * (1 + bound) * m,
        sharp=interval.sharp and hypothesis,
        discrepancy=interval.discrepancy,
    )


def _check_arg_hypotheses(spec: GeneratorSpec) -> None:
    from .radii import eta0

    if spec.family is Family.BOOTH:
        if not 0 < spec.alpha <= gen.CONVEXITY_THRESHOLD:
            raise HypothesisError(f"argument bound needs 0 < alpha <= 2-sqrt(3), got alpha={spec.alpha}")
        return
    if spec.family is Family.MODKOEBE:
        g, e = spec.gamma, spec.eta
        if e == 0:
            if not 0 < g <= math.pi / 2:
                raise HypothesisError(f"argument bound with eta=0 needs 0 < gamma <= pi/2, got gamma={g}")
            return
        if not 0 < g < 1:
            raise HypothesisError(f"argument bound needs 0 < gamma < 1, got gamma={g}")
        cap = min(gen.CONVEXITY_THRESHOLD, eta0(g).value)
        if not e <= cap:
            raise HypothesisError(f"argument bound needs 0 < eta <= min(2-sqrt(3), eta0(gamma)) = {cap:.10g}, got eta={e}")
        return
    raise HypothesisError(f"no argument bound is established for the {spec.family.value} family")


def arg_profile(spec: GeneratorSpec, r: float, theta) -> np.ndarray:
    """``arg(f0(z)/z)`` at ``z = r e^{i theta}``, taken continuously as ``Im log(f0/z)``."""
    log_q = gen.log_extremal_quotient(spec)
    return np.imag(log_q(r * np.exp(1j * np.asarray(theta, dtype=float))))


def arg_bound(spec: GeneratorSpec, r: float, grid: int = gen.DEFAULT_GRID) -> float:
    """``max_{|z|=r} |arg(f0(z)/z)|``, bounding ``|arg f(z)/z|`` for every member."""
    _check_arg_hypotheses(spec)
    if not 0 < r <= 1:
        raise ValueError(f"r must lie in (0,1], got {r}")
    theta = 2 * np.pi * np.arange(grid) / grid
    values = np.abs(arg_profile(spec, r, theta))
    i = int(np.argmax(values))
    step = theta[1] - theta[0]
    res = minimize_scalar(
        lambda t: -abs(float(arg_profile(spec, r, t))),
        bounds=(theta[i] - step, theta[i] + step),
        method="bounded",
        options={"xatol": 1e-10},
    )
    return max(float(values[i]), -float(res.fun))
