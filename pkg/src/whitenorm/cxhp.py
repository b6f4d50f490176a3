"""Fixed-point complex arithmetic on plain python ints.

A value is (re, im) scaled by 2^BITS.  768 fraction bits (~230 decimal
digits) cover the worst amplification met in this package: verifying the
filling relation multiplies entries of size |s|^p ~ 1e48, whose products
cancel down to ~1e-14, and certifying root symmetry classes needs to beat
condition numbers beyond 1e13.

Only ring operations, division and square root are provided; everything is
deterministic, so identical inputs give identical bits on every platform.
"""

from __future__ import annotations

import cmath
import math

BITS = 768
_ONE = 1 << BITS


class HPComplex:
    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int):
        self.re = re
        self.im = im

    # -- conversions ---------------------------------------------------------

    @classmethod
    def from_complex(cls, z) -> "HPComplex":
        z = complex(z)
        return cls(round(z.real * _ONE), round(z.imag * _ONE))

    @classmethod
    def from_int(cls, n: int) -> "HPComplex":
        return cls(n << BITS, 0)

    def to_complex(self) -> complex:
        return complex(self.re / _ONE, self.im / _ONE)

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "HPComplex":
        if isinstance(other, HPComplex):
            return other
        if isinstance(other, int):
            return HPComplex(other << BITS, 0)
        return HPComplex.from_complex(other)

    def __add__(self, other):
        o = self._coerce(other)
        return HPComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return HPComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        return HPComplex(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return HPComplex(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        return HPComplex(
            (self.re * o.re - self.im * o.im) >> BITS,
            (self.re * o.im + self.im * o.re) >> BITS,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero in fixed-point complex")
        return HPComplex(
            ((self.re * o.re + self.im * o.im) << BITS) // den,
            ((self.im * o.re - self.re * o.im) << BITS) // den,
        )

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __eq__(self, other):
        o = self._coerce(other)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __abs__(self) -> float:
        # adaptive downshift keeps huge magnitudes inside float range
        shift = max(self.re.bit_length(), self.im.bit_length()) - 500
        if shift > 0:
            x, y = self.re >> shift, self.im >> shift
            return math.hypot(float(x), float(y)) * 2.0**shift / _ONE
        return math.hypot(self.re / _ONE, self.im / _ONE)

    def conjugate(self) -> "HPComplex":
        return HPComplex(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    # -- functions ------------------------------------------------------------

    def powi(self, n: int) -> "HPComplex":
        base = self if n >= 0 else HPComplex.from_int(1) / self
        n = abs(n)
        out = HPComplex.from_int(1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self) -> "HPComplex":
        if self.is_zero():
            return HPComplex(0, 0)
        seed = cmath.sqrt(self.to_complex())
        if seed == 0:
            seed = 1e-150  # extreme underflow: let Newton recover
        x = HPComplex.from_complex(seed)
        for _ in range(9):
            x = (x + self / x) / 2
        return x

    def __repr__(self):
        return f"HPComplex({self.to_complex()!r})"
