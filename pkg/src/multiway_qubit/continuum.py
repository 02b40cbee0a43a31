"""Continuum reference objects for H = Pauli-X (hbar = 1).

Error hierarchy: ``expm_2x2`` is a closed form, exact up to rounding;
``expm_limit`` carries an O(1/n) method error that stays far above the
rounding error of its O(log n) double-precision multiplies for n up to
about 10**6.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .templates import WaveFunction


@dataclass(frozen=True)
class Matrix2c:
    """Row-major 2x2 complex matrix ``[[a, b], [c, d]]``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        for name in "abcd":
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError(f"non-finite matrix entry {name}={v}")
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> Matrix2c:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Matrix2c) -> Matrix2c:
        return Matrix2c(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: Matrix2c) -> Matrix2c:
        return Matrix2c(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Matrix2c) -> Matrix2c:
        return Matrix2c(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def scale(self, s: complex) -> Matrix2c:
        return Matrix2c(self.a * s, self.b * s, self.c * s, self.d * s)

    def trace(self) -> complex:
        return self.a + self.d

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def apply(self, psi: WaveFunction) -> WaveFunction:
        return WaveFunction(self.a * psi.c0 + self.b * psi.c1, self.c * psi.c0 + self.d * psi.c1)

    def max_abs(self) -> float:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))


PAULI_X = Matrix2c(0, 1, 1, 0)


def exact_solution(t: float) -> WaveFunction:
    """cos t |0> - i sin t |1>, the solution of i dPsi/dt = X Psi with Psi(0) = |0>."""
    return WaveFunction(complex(math.cos(t)), complex(0.0, -math.sin(t)))


def schrodinger_residual(t: float, h: float) -> float:
    if h <= 0:
        raise ValueError("step h must be positive")
    ahead, behind, here = exact_solution(t + h), exact_solution(t - h), exact_solution(t)
    d0 = 1j * (ahead.c0 - behind.c0) / (2 * h)
    d1 = 1j * (ahead.c1 - behind.c1) / (2 * h)
    return l2_error(WaveFunction(d0, d1), PAULI_X.apply(here))


def _sinhc(mu: complex) -> complex:
    if abs(mu) < 1e-4:
        mu2 = mu * mu
        return 1 + mu2 / 6 + mu2 * mu2 / 120
    return cmath.sinh(mu) / mu


def expm_2x2(M: Matrix2c) -> Matrix2c:
    """Closed-form matrix exponential.

    With ``M = (tr/2) I + N`` and ``mu**2 = -det N``:
    ``e^M = e^(tr/2) (cosh(mu) I + sinh(mu)/mu N)``.
    """
    half_tr = M.trace() / 2
    N = M - Matrix2c.identity().scale(half_tr)
    mu = cmath.sqrt(-N.det())
    inner = Matrix2c.identity().scale(cmath.cosh(mu)) + N.scale(_sinhc(mu))
    return inner.scale(cmath.exp(half_tr))


def matrix_power(M: Matrix2c, n: int) -> Matrix2c:
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = Matrix2c.identity()
    base = M
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def expm_limit(M: Matrix2c, n: int) -> Matrix2c:
    """``(I + M/n)**n`` by binary exponentiation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return matrix_power(Matrix2c.identity() + M.scale(1 / n), n)


def l2_error(a: WaveFunction, b: WaveFunction) -> float:
    d0, d1 = a.c0 - b.c0, a.c1 - b.c1
    return math.hypot(d0.real, d0.imag, d1.real, d1.imag)
