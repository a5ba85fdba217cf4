"""Schwarz functions: analytic self-maps of the unit disk fixing the origin.

Three families are supported:

* ``monomial`` -- ``z**k`` for ``k >= 1``;
* ``moebius_twist`` -- ``z (z + a) / (1 + conj(a) z)`` with ``|a| < 1``;
* ``scaled_poly`` -- ``sum_{k>=1} c_k z^k`` whose boundary sup-norm is
  certified ``<= 1`` on a dense grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ParameterError
from .series import PowerSeries

CERTIFY_GRID = 4096
CERTIFY_SLACK = 1e-12


class SchwarzFamily(str, Enum):
    MONOMIAL = "monomial"
    MOEBIUS_TWIST = "moebius_twist"
    SCALED_POLY = "scaled_poly"


@dataclass(frozen=True)
class SchwarzSpec:
    family: SchwarzFamily
    k: int = 1
    a: complex = 0j
    coeffs: tuple[complex, ...] = ()

    def __post_init__(self):
        if self.family is SchwarzFamily.MONOMIAL:
            if int(self.k) != self.k or self.k < 1:
                raise ParameterError(f"monomial degree must be an integer >= 1, got {self.k}")
        elif self.family is SchwarzFamily.MOEBIUS_TWIST:
            if not abs(self.a) < 1:
                raise ParameterError(f"twist parameter must satisfy |a| < 1, got {self.a}")
        elif self.family is SchwarzFamily.SCALED_POLY:
            c = np.asarray(self.coeffs, dtype=complex)
            if c.size == 0 or not np.all(np.isfinite(c)):
                raise ParameterError("scaled_poly needs finite coefficients c_1, c_2, ...")
            sup = boundary_sup(self)
            if sup > 1 + CERTIFY_SLACK:
                raise ParameterError(f"scaled_poly boundary sup-norm {sup:.15g} exceeds 1")

    @classmethod
    def identity(cls) -> SchwarzSpec:
        return cls(SchwarzFamily.MONOMIAL, k=1)

    @classmethod
    def monomial(cls, k: int) -> SchwarzSpec:
        return cls(SchwarzFamily.MONOMIAL, k=k)

    @classmethod
    def moebius_twist(cls, a: complex) -> SchwarzSpec:
        return cls(SchwarzFamily.MOEBIUS_TWIST, a=complex(a))

    @classmethod
    def scaled_poly(cls, coeffs) -> SchwarzSpec:
        return cls(SchwarzFamily.SCALED_POLY, coeffs=tuple(complex(c) for c in coeffs))

    @property
    def is_identity(self) -> bool:
        return self.family is SchwarzFamily.MONOMIAL and self.k == 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if self.family is SchwarzFamily.MONOMIAL:
            return z**self.k
        if self.family is SchwarzFamily.MOEBIUS_TWIST:
            a = self.a
            return z * (z + a) / (1 + np.conj(a) * z)
        c = np.asarray(self.coeffs, dtype=complex)
        acc = np.zeros_like(z)
        for ck in c[::-1]:
            acc = (acc + ck) * z
        return acc

    def series(self, order: int) -> PowerSeries:
        out = np.zeros(order, dtype=complex)
        if self.family is SchwarzFamily.MONOMIAL:
            if self.k < order:
                out[self.k] = 1.0
        elif self.family is SchwarzFamily.MOEBIUS_TWIST:
            # z (z + a) * sum_n (-conj(a) z)^n
            a = self.a
            geo = (-np.conj(a)) ** np.arange(order)
            out[1:] += a * geo[: order - 1]
            out[2:] += geo[: order - 2]
        else:
            c = np.asarray(self.coeffs, dtype=complex)[: order - 1]
            out[1 : 1 + c.size] = c
        return PowerSeries(out)

    def label(self) -> str:
        if self.family is SchwarzFamily.MONOMIAL:
            return f"monomial(k={self.k})"
        if self.family is SchwarzFamily.MOEBIUS_TWIST:
            return f"moebius_twist(a={self.a.real:.6g}{self.a.imag:+.6g}j)"
        return f"scaled_poly(deg={len(self.coeffs)})"


def boundary_sup(spec: SchwarzSpec, grid: int = CERTIFY_GRID) -> float:
    """Max of ``|omega|`` over ``grid`` equally spaced points of the unit circle."""
    theta = 2 * np.pi * np.arange(grid) / grid
    return float(np.max(np.abs(spec(np.exp(1j * theta)))))


def random_schwarz(rng: np.random.Generator) -> SchwarzSpec:
    """Draw a witness from a fixed mixture of the three families."""
    kind = rng.integers(3)
    if kind == 0:
        return SchwarzSpec.monomial(int(rng.integers(1, 5)))
    if kind == 1:
        radius = 0.95 * np.sqrt(rng.random())
        return SchwarzSpec.moebius_twist(radius * np.exp(2j * np.pi * rng.random()))
    degree = int(rng.integers(1, 7))
    c = rng.normal(size=degree) + 1j * rng.normal(size=degree)
    theta = 2 * np.pi * np.arange(CERTIFY_GRID) / CERTIFY_GRID
    powers = np.exp(1j * np.outer(theta, np.arange(1, degree + 1)))
    sup = np.max(np.abs(powers @ c))
    # keep a margin so the grid certificate also covers points between nodes
    return SchwarzSpec.scaled_poly(c * (1 - 1e-3) * rng.uniform(0.3, 1.0) / sup)
