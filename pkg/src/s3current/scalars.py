"""Exact scalar arithmetic: rationals and Gaussian rationals.

Every coefficient in the kernel is a Gaussian rational a + b*i with
arbitrary-precision rational a, b.  Values are immutable and arithmetic is
exact, so equality of canonical forms is plain structural equality.
"""

from __future__ import annotations

import re as _re

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

__all__ = [
    "Rational",
    "GaussianRational",
    "Q",
    "gq",
    "ZERO",
    "ONE",
    "I_UNIT",
    "parse_gq",
]


def Q(num, den=1) -> Rational:
    """Reduced rational num/den.  Raises ZeroDivisionError on den == 0."""
    if den == 1:
        return Rational(num)
    return Rational(num, den)


_Q0 = Q(0)
_Q1 = Q(1)


class GaussianRational:
    """Immutable a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is type(_Q0) else Q(re))
        object.__setattr__(self, "im", im if type(im) is type(_Q0) else Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        other = gq(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = gq(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return gq(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = gq(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0:
            if a == 0:
                return ZERO
            return GaussianRational(a * c, a * d)
        if d == 0:
            return GaussianRational(a * c, b * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = gq(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return gq(other) / self

    # -- involution and predicates ----------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def norm(self) -> Rational:
        """conj(x)*x as a rational; nonnegative, zero iff x == 0."""
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, type(_Q0))):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text form ---------------------------------------------------------
    # "p/q", "p/q+r/s*i", "r/s*i"; denominators always printed, so printing
    # and parsing round-trip exactly.

    def __str__(self):
        def frac(q):
            return f"{q.numerator}/{q.denominator}"

        if self.im == 0:
            return frac(self.re)
        if self.re == 0:
            return f"{frac(self.im)}*i"
        sep = "+" if self.im > 0 else "-"
        return f"{frac(self.re)}{sep}{frac(abs(self.im))}*i"

    def __repr__(self):
        return f"GaussianRational({self})"


def gq(x) -> GaussianRational:
    """Coerce an int, Rational, pair, or GaussianRational to GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, tuple):
        return GaussianRational(x[0], x[1])
    return GaussianRational(x)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_GQ_RE = _re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?:(?P<sep>[+-])(?P<im1>\d+(?:/\d+)?)\*i)?|(?P<im2>{_RAT})\*i)\s*$"
)


def parse_gq(text: str) -> GaussianRational:
    """Parse the text form produced by str(); accepts bare integers too."""
    m = _GQ_RE.match(text)
    if not m:
        raise ValueError(f"not a GaussianRational: {text!r}")
    if m.group("im2") is not None:
        return GaussianRational(0, Q(m.group("im2")))
    re_part = Q(m.group("re"))
    if m.group("sep") is None:
        return GaussianRational(re_part)
    im = Q(m.group("im1"))
    if m.group("sep") == "-":
        im = -im
    return GaussianRational(re_part, im)
