"""Exact arithmetic in the Gaussian rationals Q(i).

Every scalar in this package is a GaussianRational: a pair of exact
rationals (real and imaginary part) backed by gmpy2's mpq.  mpq keeps
fractions reduced with positive denominator, so structural equality of
the pair is semantic equality in Q(i).  Anything that would leave Q(i)
(square roots of non-squares, division by zero) fails loudly.
"""

from __future__ import annotations

import re

from gmpy2 import is_square, isqrt, mpq, mpz

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")
# imaginary chunk: "i", "-i", "3*i", "-1/3*i", "2i"
_IM = re.compile(r"^(?P<sign>[+-]?)(?P<coef>\d+(/\d+)?)?\*?i$")


class GaussianRational:
    """An element of Q(i), immutable after construction."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (GaussianRational, (str(self.re), str(self.im)))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """The field norm re^2 + im^2, an exact rational (mpq)."""
        return self.re * self.re + self.im * self.im

    # -- predicates / hashing ------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- formatting ----------------------------------------------------

    def __str__(self):
        return format_gq(self)

    def __repr__(self):
        return f"GQ({format_gq(self)!r})"

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        return parse_gq(text)


GQ = GaussianRational

ZERO = GQ(0)
ONE = GQ(1)
TWO = GQ(2)
I = GQ(0, 1)
MINUS_ONE = GQ(-1)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, type(mpq(0)), type(mpz(0)))):
        return GaussianRational(x)
    return NotImplemented


def gq(x, y=0) -> GaussianRational:
    """Convenience constructor: gq(1,2) = 1+2i, gq('1/3') parses."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        base = parse_gq(x)
        if y:
            return base + I * gq(y)
        return base
    return GaussianRational(x, y)


def _fmt_rat(q) -> str:
    return str(q)  # mpq prints p or p/q with reduced, positive denominator


def format_gq(z: GaussianRational) -> str:
    """Serialize per the report grammar: "p/q", "r/s*i" or "p/q+r/s*i"."""
    if not z.im:
        return _fmt_rat(z.re)
    im_part = f"{_fmt_rat(abs(z.im))}*i"
    if not z.re:
        return im_part if z.im > 0 else "-" + im_part
    sign = "+" if z.im > 0 else "-"
    return f"{_fmt_rat(z.re)}{sign}{im_part}"


def parse_gq(text: str) -> GaussianRational:
    """Parse the scalar grammar; accepts "i", "-i" and "2i" as well."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    if _RAT.match(s):
        return GaussianRational(mpq(s))
    m = _IM.match(s)
    if m:
        coef = mpq(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        return GaussianRational(0, coef)
    # split into real +/- imaginary at the last top-level +/- sign
    for k in range(len(s) - 1, 0, -1):
        if s[k] in "+-" and s[k - 1] not in "+-*/":
            head, tail = s[:k], s[k:]
            if _RAT.match(head):
                m = _IM.match(tail)
                if m:
                    coef = mpq(m.group("coef") or 1)
                    if m.group("sign") == "-":
                        coef = -coef
                    return GaussianRational(mpq(head), coef)
    raise ValueError(f"cannot parse Gaussian rational: {text!r}")


def _rat_sqrt(q):
    """Exact square root of a non-negative mpq, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    if not (is_square(num) and is_square(den)):
        return None
    return mpq(isqrt(num), isqrt(den))


def gq_sqrt(z: GaussianRational):
    """An exact square root of z in Q(i), or None if z is not a square.

    For z = x + yi a root p + qi needs p^2 - q^2 = x and 2pq = y; both
    p^2 and q^2 are rational iff norm(z) is a rational square.
    """
    if not z:
        return ZERO
    if z.im == 0:
        r = _rat_sqrt(z.re)
        if r is not None:
            return GaussianRational(r)
        r = _rat_sqrt(-z.re)
        if r is not None:
            return GaussianRational(0, r)
        return None
    n = _rat_sqrt(z.norm())
    if n is None:
        return None
    p2 = (z.re + n) / 2
    p = _rat_sqrt(p2)
    if p is None or p == 0:
        return None
    q = z.im / (2 * p)
    root = GaussianRational(p, q)
    assert root * root == z
    return root
