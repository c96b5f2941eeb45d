"""Outward-rounded interval arithmetic on doubles.

Every operation pads its result by one ulp in each direction (two for
cos, whose libm implementation is not guaranteed correctly rounded), so
true values are always enclosed.  Desk-scale certification only: no
arbitrary-precision intervals.
"""

from __future__ import annotations

import math
from fractions import Fraction

_INF = math.inf
_TWO_PI = 2 * math.pi


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


class Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        if not (lo <= hi):
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def width(self) -> float:
        return self.hi - self.lo

    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float | Fraction) -> bool:
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    # -- arithmetic (outward rounded) ---------------------------------

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return Interval(_down(min(products)), _up(max(products)))

    def scale(self, c: float) -> "Interval":
        a, b = self.lo * c, self.hi * c
        if a > b:
            a, b = b, a
        return Interval(_down(a), _up(b))

    def pow_int(self, n: int) -> "Interval":
        """x^n for integer n >= 0, tight on monotone/even cases."""
        if n < 0:
            raise ValueError("negative exponent")
        if n == 0:
            return Interval(1.0, 1.0)
        lo_n, hi_n = self.lo ** n, self.hi ** n
        if n % 2 == 1 or self.lo >= 0:
            return Interval(_down(lo_n), _up(hi_n))
        if self.hi <= 0:
            return Interval(_down(hi_n), _up(lo_n))
        return Interval(0.0, _up(max(lo_n, hi_n)))

    def cos(self) -> "Interval":
        """Enclosure of cos over the interval."""
        if self.hi - self.lo >= _TWO_PI:
            return Interval(-1.0, 1.0)
        lo = hi = None
        for v in (math.cos(self.lo), math.cos(self.hi)):
            lo = v if lo is None else min(lo, v)
            hi = v if hi is None else max(hi, v)
        # extrema at integer multiples of pi inside the interval
        k_min = math.ceil(self.lo / math.pi - 1e-12)
        k_max = math.floor(self.hi / math.pi + 1e-12)
        for k in range(k_min, k_max + 1):
            v = 1.0 if k % 2 == 0 else -1.0
            lo = min(lo, v)
            hi = max(hi, v)
        return Interval(max(-1.0, _down(_down(lo))), min(1.0, _up(_up(hi))))


def from_fraction(c: Fraction | int) -> Interval:
    c = Fraction(c)
    f = float(c)
    if Fraction(f) == c:
        return Interval(f, f)
    return Interval(_down(f), _up(f))


def from_point(x: float) -> Interval:
    return Interval(x, x)


def hull(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))
