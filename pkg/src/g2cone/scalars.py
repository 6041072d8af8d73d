"""Exact scalar fields: Q(i) for matrix entries, Q(sqrt 3) for table checks."""

from __future__ import annotations

from fractions import Fraction


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not exact: {x!r}")


class GaussRational:
    """a + b*i with rational a, b; the field housing u(3) matrix entries."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.re == other and self.im == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRational(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, GaussRational)
                       else GaussRational(-_frac(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re * other, self.im * other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re / other, self.im / other)
        n = other.re * other.re + other.im * other.im
        return self * GaussRational(other.re / n, -other.im / n)

    def conjugate(self):
        return GaussRational(self.re, -self.im)

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"


I = GaussRational(0, 1)


class QuadExt:
    """a + b*sqrt(3) with rational a, b; exact scalars for the Q0 tables."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.a == other and self.b == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return QuadExt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadExt) else QuadExt(-_frac(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.a * other, self.b * other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return QuadExt(self.a * other.a + 3 * self.b * other.b,
                       self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.a / other, self.b / other)
        n = other.a * other.a - 3 * other.b * other.b
        return self * QuadExt(other.a / n, -other.b / n)

    def __rtruediv__(self, other):
        return QuadExt(_frac(other)) / self

    def __float__(self):
        return float(self.a) + float(self.b) * 3 ** 0.5

    def __repr__(self):
        if not self.b:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a}, {self.b})"

    def text(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt3"
        return f"{self.a}+{self.b}*sqrt3" if self.b > 0 else f"{self.a}{self.b}*sqrt3"


SQRT3 = QuadExt(0, 1)
