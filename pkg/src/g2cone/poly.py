"""Exact sparse multivariate polynomials.

The main ring has variables (v1, v2, x1..x6, s, a), with the trace relation
v1+v2+v3 = 0 built in: v3 is never stored, the generator ``v(3)`` returns
-v1-v2.  Coefficients are ``Fraction`` by default but any exact field element
with the usual arithmetic dunders (e.g. ``QuadExt``) passes through untouched,
so the same engine serves the sqrt(3)-valued obstruction tables and the
auxiliary rings used in identity checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class Ring:
    """An ordered variable list; polynomials remember their ring."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(self.names)}

    def __repr__(self):
        return f"Ring{self.names}"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = _coerce(c)
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * len(self.names): c})

    def var(self, name: str) -> "Poly":
        exp = [0] * len(self.names)
        exp[self.index[name]] = 1
        return Poly(self, {tuple(exp): Fraction(1)})


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    """Sparse polynomial: map from exponent tuple to coefficient.

    Canonical form never stores zero coefficients, so equality and zero
    tests are exact dictionary comparisons.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- ring operations ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else self.ring.const(other).__neg__())

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e, 0) + c1 * c2
                    if s:
                        out[e] = s
                    elif e in out:
                        del out[e]
            return Poly(self.ring, out)
        other = _coerce(other)
        if not other:
            return self.ring.zero()
        return Poly(self.ring, {e: c * other for e, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant():
                raise ZeroDivisionError("can only divide by a constant polynomial")
            other = other.constant()
        return self * (Fraction(1) / _coerce(other) if isinstance(other, (int, Fraction))
                       else _invert(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- structure ----------------------------------------------------------

    def is_constant(self) -> bool:
        z = (0,) * len(self.ring.names)
        return not self.terms or set(self.terms) == {z}

    def constant(self):
        z = (0,) * len(self.ring.names)
        return self.terms.get(z, Fraction(0))

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return 0
        if name is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.index[name]
        return max(e[i] for e in self.terms)

    def coefficient(self, name: str, power: int) -> "Poly":
        """Collect the coefficient of name**power (exponent slot zeroed)."""
        i = self.ring.index[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                out[e[:i] + (0,) + e[i + 1:]] = c
        return Poly(self.ring, out)

    def subs(self, values: dict):
        """Evaluate at numeric/field values for some or all variables."""
        remaining = [n for n in self.ring.names if n not in values]
        sub_ring = Ring(remaining)
        keep = [self.ring.index[n] for n in remaining]
        out = sub_ring.zero()
        for e, c in self.terms.items():
            factor = c
            for n, val in values.items():
                factor = factor * (_coerce(val) ** e[self.ring.index[n]]
                                   if e[self.ring.index[n]] else 1)
            key = tuple(e[i] for i in keep)
            out = out + Poly(sub_ring, {key: factor})
        return out

    def diff(self, name: str) -> "Poly":
        i = self.ring.index[name]
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Poly(self.ring, out)

    def map_coefficients(self, fn) -> "Poly":
        return Poly(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def eval_float(self, values: dict) -> float:
        """Fast float evaluation; every variable must be supplied."""
        total = 0.0
        idx = [values[n] for n in self.ring.names]
        for e, c in self.terms.items():
            t = float(c)
            for xi, p in zip(idx, e):
                if p:
                    t *= xi ** p
            total += t
        return total

    def term_arrays(self):
        """(exponents, coefficients) in canonical order, for array evaluation."""
        items = sorted(self.terms.items())
        exps = [e for e, _ in items]
        coefs = [float(c) for _, c in items]
        return exps, coefs

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"Poly({self.text()})"

    def text(self) -> str:
        """Canonical serialization: sorted monomials, rationals as p/q."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            mon = "*".join(
                n if p == 1 else f"{n}^{p}"
                for n, p in zip(self.ring.names, e) if p
            )
            cs = _coef_text(c)
            if mon:
                parts.append(f"{cs}*{mon}" if cs not in ("1", "-1") else
                             (mon if cs == "1" else f"-{mon}"))
            else:
                parts.append(cs)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _coef_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return str(c)


def _invert(c):
    return 1 / c


# -- the main ring ----------------------------------------------------------

MAIN_VARS = ("v1", "v2", "x1", "x2", "x3", "x4", "x5", "x6", "s", "a")
RING = Ring(MAIN_VARS)


def v(i: int) -> Poly:
    """Coordinate v_i; v3 is eliminated through v1+v2+v3 = 0."""
    if i in (1, 2):
        return RING.var(f"v{i}")
    if i == 3:
        return -RING.var("v1") - RING.var("v2")
    raise ValueError(f"v index {i}")


def x(i: int) -> Poly:
    if not 1 <= i <= 6:
        raise ValueError(f"x index {i}")
    return RING.var(f"x{i}")


def s_var() -> Poly:
    return RING.var("s")


def a_var() -> Poly:
    return RING.var("a")


def const(c) -> Poly:
    return RING.const(c)


ZERO = RING.zero()
ONE = RING.one()
