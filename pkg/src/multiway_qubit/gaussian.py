"""Exact Gaussian integers a + bi over Python's arbitrary-precision ints."""

from __future__ import annotations

from typing import Union

_IntLike = Union[int, "GaussianInt"]


class GaussianInt:
    """Immutable complex number with integer real and imaginary parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: int = 0, im: int = 0) -> None:
        if not isinstance(re, int) or not isinstance(im, int):
            raise TypeError("GaussianInt components must be integers")
        self._re = int(re)
        self._im = int(im)

    @property
    def re(self) -> int:
        return self._re

    @property
    def im(self) -> int:
        return self._im

    @classmethod
    def _coerce(cls, other: object) -> GaussianInt | None:
        if isinstance(other, GaussianInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return cls(other, 0)
        return None

    def __repr__(self) -> str:
        return f"GaussianInt({self._re}, {self._im})"

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        return f"{self._re}{self._im:+d}i"

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return bool(self._re or self._im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self._re, -self._im)

    def __pos__(self) -> GaussianInt:
        return self

    def __add__(self, other: _IntLike) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other: _IntLike) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self._re - o._re, self._im - o._im)

    def __rsub__(self, other: _IntLike) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: _IntLike) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        if b == 0:
            return GaussianInt(a * c, a * d)
        if d == 0:
            return GaussianInt(a * c, b * c)
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> GaussianInt:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = GaussianInt(1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base.square()
        return result

    def square(self) -> GaussianInt:
        a, b = self._re, self._im
        # (a+bi)^2 = (a+b)(a-b) + 2abi: two big multiplies instead of three
        return GaussianInt((a + b) * (a - b), 2 * a * b)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self._re, -self._im)

    def norm(self) -> int:
        """Squared modulus ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_complex(self, scale: int = 1) -> complex:
        """Return ``self / scale`` as a complex double.

        The division happens on exact integers, so components far outside
        double range still convert correctly when the quotient is
        representable. Raises OverflowError otherwise.
        """
        if scale == 0:
            raise ZeroDivisionError("scale must be nonzero")
        try:
            return complex(self._re / scale, self._im / scale)
        except OverflowError as exc:
            raise OverflowError(
                f"{self!r} / {scale.bit_length()}-bit scale is outside double range"
            ) from exc


ONE = GaussianInt(1, 0)
ZERO = GaussianInt(0, 0)
I = GaussianInt(0, 1)
MINUS_I = GaussianInt(0, -1)

# (-i)^m for m mod 4
_NEG_I_POWERS = (ONE, MINUS_I, GaussianInt(-1, 0), I)


def neg_i_power(m: int) -> GaussianInt:
    """Return ``(-i)**m`` using its period-4 cycle."""
    return _NEG_I_POWERS[m % 4]
