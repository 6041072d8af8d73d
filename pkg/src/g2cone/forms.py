"""Exact exterior algebra with polynomial coefficients.

Forms live on an abstract orthonormal coframe with ``nslots`` slots.  Two
conventions are used in the package: 9 slots (e1..e6, h1, h2, h3) for
invariant forms on the group, and 7 slots (e0, e1..e6) for pointwise cone
algebra at unit radius.  Antisymmetry is structural: components are stored
on strictly increasing multi-indices and every product sorts indices with
sign bookkeeping.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DegreeMismatch, VerticalComponent
from .poly import Poly, RING, Ring, v, x

E_SLOTS = 9      # e1..e6 at 0..5, h1..h3 at 6..8
CONE_SLOTS = 7   # e0 at 0, e1..e6 at 1..6


def _sort_index(idx):
    """Sort a multi-index, returning (sorted tuple, sign) or (None, 0) if repeated."""
    idx = list(idx)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j] < idx[j - 1]:
            idx[j], idx[j - 1] = idx[j - 1], idx[j]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i] == idx[i - 1]:
            return None, 0
    return tuple(idx), sign


class Form:
    """Degree-k form: map from strictly increasing multi-index to Poly."""

    __slots__ = ("degree", "terms", "nslots", "ring")

    def __init__(self, degree: int, terms: dict | None = None,
                 nslots: int = E_SLOTS, ring: Ring = RING):
        self.degree = degree
        self.nslots = nslots
        self.ring = ring
        self.terms = {}
        if terms:
            for idx, c in terms.items():
                if not isinstance(c, Poly):
                    c = ring.const(c)
                if c:
                    self.terms[tuple(idx)] = c

    # -- linear structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Form) and self.degree == other.degree
                and self.nslots == other.nslots and self.terms == other.terms)

    def __neg__(self):
        return Form(self.degree, {i: -c for i, c in self.terms.items()},
                    self.nslots, self.ring)

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.degree != other.degree or self.nslots != other.nslots:
            raise DegreeMismatch("cannot add forms of different degree/frame")
        out = dict(self.terms)
        for i, c in other.terms.items():
            s = out.get(i)
            s = c if s is None else s + c
            if s:
                out[i] = s
            elif i in out:
                del out[i]
        return Form(self.degree, out, self.nslots, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Form):
            return NotImplemented
        if not isinstance(scalar, Poly):
            scalar = self.ring.const(scalar)
        return Form(self.degree,
                    {i: c * scalar for i, c in self.terms.items()},
                    self.nslots, self.ring)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Form(self.degree, {i: c / scalar for i, c in self.terms.items()},
                    self.nslots, self.ring)

    # -- structure -----------------------------------------------------------

    def is_tangential(self) -> bool:
        """No h-slot (index >= 6) appears; only meaningful on the 9-slot frame."""
        return all(all(i < 6 for i in idx) for idx in self.terms)

    def component(self, idx) -> Poly:
        key, sign = _sort_index(tuple(idx))
        if key is None:
            return self.ring.zero()
        c = self.terms.get(key)
        if c is None:
            return self.ring.zero()
        return c if sign == 1 else -c

    def map_coefficients(self, fn) -> "Form":
        return Form(self.degree, {i: fn(c) for i, c in self.terms.items()},
                    self.nslots, self.ring)

    def text(self) -> str:
        """Canonical serialization, sorted multi-indices."""
        if not self.terms:
            return "0"
        names = _slot_names(self.nslots)
        lines = []
        for idx in sorted(self.terms):
            label = "^".join(names[i] for i in idx) if idx else "1"
            lines.append(f"({self.terms[idx].text()}) {label}")
        return " + ".join(lines)

    def __repr__(self):
        return f"Form<{self.degree}>({self.text()})"


def _slot_names(nslots):
    if nslots == E_SLOTS:
        return ("e1", "e2", "e3", "e4", "e5", "e6", "h1", "h2", "h3")
    if nslots == CONE_SLOTS:
        return ("e0", "e1", "e2", "e3", "e4", "e5", "e6")
    return tuple(f"f{i}" for i in range(nslots))


def zero_form(degree: int, nslots: int = E_SLOTS, ring: Ring = RING) -> Form:
    return Form(degree, {}, nslots, ring)


def basis_form(*idx, nslots: int = E_SLOTS, ring: Ring = RING) -> Form:
    """e^{i1...ik} from 0-based slot indices."""
    key, sign = _sort_index(idx)
    if key is None:
        return zero_form(len(idx), nslots, ring)
    return Form(len(idx), {key: ring.const(sign)}, nslots, ring)


def wedge(alpha: Form, beta: Form) -> Form:
    """Graded-commutative associative product."""
    if alpha.nslots != beta.nslots:
        raise DegreeMismatch("wedge of forms on different frames")
    out: dict = {}
    ring = alpha.ring
    for i1, c1 in alpha.terms.items():
        for i2, c2 in beta.terms.items():
            key, sign = _sort_index(i1 + i2)
            if key is None:
                continue
            c = c1 * c2
            if sign < 0:
                c = -c
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return Form(alpha.degree + beta.degree, out, alpha.nslots, ring)


def wedge_all(*forms: Form) -> Form:
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def contract(i: int, alpha: Form) -> Form:
    """Interior product with the orthonormal frame vector of slot i."""
    out: dict = {}
    for idx, c in alpha.terms.items():
        if i not in idx:
            continue
        pos = idx.index(i)
        key = idx[:pos] + idx[pos + 1:]
        val = c if pos % 2 == 0 else -c
        s = out.get(key)
        s = val if s is None else s + val
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return Form(alpha.degree - 1, out, alpha.nslots, alpha.ring)


def contract_vector(coeffs, alpha: Form) -> Form:
    """Interior product with sum_i coeffs[i] * frame_i (Poly coefficients)."""
    out = zero_form(alpha.degree - 1, alpha.nslots, alpha.ring)
    for i, c in enumerate(coeffs):
        if c:
            out = out + contract(i, alpha) * c
    return out


def _hodge(alpha: Form, slots: tuple[int, ...]) -> Form:
    """Star against the ordered orthonormal volume of ``slots``."""
    full = tuple(slots)
    out: dict = {}
    for idx, c in alpha.terms.items():
        comp = tuple(i for i in full if i not in idx)
        key, sign = _sort_index(idx + comp)
        # key equals full; sign is the permutation sign moving idx to front
        out[comp] = c if sign == 1 else -c
    return Form(len(full) - alpha.degree, out, alpha.nslots, alpha.ring)


def hodge6(alpha: Form) -> Form:
    """Hodge star on tangential forms, orientation e^123456."""
    if alpha.nslots != E_SLOTS:
        raise DegreeMismatch("hodge6 expects the 9-slot frame")
    if not alpha.is_tangential():
        raise VerticalComponent("hodge6 requires a tangential form")
    return _hodge(alpha, (0, 1, 2, 3, 4, 5))


def hodge7(alpha: Form) -> Form:
    """Hodge star on the 7-slot cone frame, orientation e^0123456."""
    if alpha.nslots != CONE_SLOTS:
        raise DegreeMismatch("hodge7 expects the 7-slot frame")
    return _hodge(alpha, (0, 1, 2, 3, 4, 5, 6))


def frame_inner(alpha: Form, beta: Form) -> Poly:
    """Frame inner product sum_I alpha_I beta_I over increasing indices."""
    if alpha.degree != beta.degree:
        raise DegreeMismatch("inner product needs equal degrees")
    out = alpha.ring.zero()
    for idx, c in alpha.terms.items():
        d = beta.terms.get(idx)
        if d is not None:
            out = out + c * d
    return out


# -- standard invariant forms -------------------------------------------------


def omega() -> Form:
    """Almost-complex 2-form e^12 + e^34 + e^56."""
    return (basis_form(0, 1) + basis_form(2, 3) + basis_form(4, 5))


def re_omega3() -> Form:
    """Re of the (3,0)-form: e^246 - e^136 - e^235 - e^145."""
    return (basis_form(1, 3, 5) - basis_form(0, 2, 5)
            - basis_form(1, 2, 4) - basis_form(0, 3, 4))


def im_omega3() -> Form:
    """Im of the (3,0)-form: e^135 - e^245 - e^146 - e^236."""
    return (basis_form(0, 2, 4) - basis_form(1, 3, 4)
            - basis_form(0, 3, 5) - basis_form(1, 2, 5))


def eta_form() -> Form:
    """v1 e^56 + v2 e^34 + v3 e^12, the co-closed primitive (1,1) family."""
    return (basis_form(4, 5) * v(1) + basis_form(2, 3) * v(2)
            + basis_form(0, 1) * v(3))


def killing_one_form() -> Form:
    """K = sum_i x_i e^i; the invariant family of Killing 1-forms."""
    out = zero_form(1)
    for i in range(6):
        out = out + basis_form(i) * x(i + 1)
    return out


_J_IMAGE = {0: (1, 1), 1: (0, -1), 2: (3, 1), 3: (2, -1), 4: (5, 1), 5: (4, -1)}


def j_one_form(alpha: Form) -> Form:
    """J on 1-forms via the vector-field identification: Je^1=e^2, etc."""
    if alpha.degree != 1:
        raise DegreeMismatch("J table acts on 1-forms")
    if not alpha.is_tangential():
        raise VerticalComponent("J acts on tangential forms")
    out: dict = {}
    for (i,), c in alpha.terms.items():
        j, sgn = _J_IMAGE[i]
        val = c if sgn == 1 else -c
        s = out.get((j,))
        s = val if s is None else s + val
        if s:
            out[(j,)] = s
    return Form(1, out, alpha.nslots, alpha.ring)


def j_dual_one_form(alpha: Form) -> Form:
    """The dual action J* = -J on 1-forms."""
    return -j_one_form(alpha)


def lambda6_generators() -> list[Form]:
    """The six 2-forms e_i . ReOmega spanning the Lambda^2_6 component."""
    rw = re_omega3()
    return [contract(i, rw) for i in range(6)]


def project2(alpha: Form, component: int) -> Form:
    """Orthogonal projection of a tangential 2-form onto Lambda^2_1/6/8.

    The generators {omega} and {e_i . ReOmega} are orthogonal with norm
    squares 3 and 2, so the projections are inner-product expansions; the
    primitive part is the remainder.
    """
    if alpha.degree != 2:
        raise DegreeMismatch("project2 acts on 2-forms")
    if not alpha.is_tangential():
        raise VerticalComponent("project2 requires a tangential form")
    if component == 1:
        w = omega()
        return w * (frame_inner(alpha, w) / 3)
    if component == 6:
        out = zero_form(2, alpha.nslots, alpha.ring)
        for g in lambda6_generators():
            out = out + g * (frame_inner(alpha, g) / 2)
        return out
    if component == 8:
        return alpha - project2(alpha, 1) - project2(alpha, 6)
    raise ValueError("component must be one of 1, 6, 8")


def alpha_op(beta: Form, kappa: Fraction | None = None) -> Form:
    """The 1-form kappa^{-1} sum_i <beta, e_i . ReOmega> e^i.

    kappa is calibrated so the Killing identity alpha(dJK) = -6K holds
    exactly; when omitted, the frozen calibrated value is used.
    """
    if beta.degree != 2:
        raise DegreeMismatch("alpha_op acts on 2-forms")
    if kappa is None:
        from .calibration import get_context

        kappa = get_context().alpha_kappa
    out = zero_form(1, beta.nslots, beta.ring)
    for i, g in enumerate(lambda6_generators()):
        c = frame_inner(beta, g) / kappa
        if c:
            out = out + basis_form(i) * c
    return out


# -- truncated jets -----------------------------------------------------------


def _det_jet(rows: list[list["Jet2"]], ring: Ring) -> "Jet2":
    """Determinant of a small Jet2 matrix by permutation expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        return (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    out = Jet2(ring.zero(), ring=ring)
    for perm, sign in _signed_permutations(n):
        term = rows[0][perm[0]]
        for r in range(1, n):
            term = term * rows[r][perm[r]]
        out = out + (term if sign == 1 else -term)
    return out


def _signed_permutations(n):
    for perm in itertools.permutations(range(n)):
        _, sign = _sort_index(perm)
        yield perm, sign


def inner_perturbed(alpha: Form, beta: Form, ginv, volratio: "Jet2",
                    convention: str = "unit") -> "Jet2":
    """Inner product of k-forms under a perturbed inverse-metric jet.

    Computes sum over increasing I, J of alpha_I beta_J det(g^{i_a j_b}),
    times the volume-ratio jet, truncated at s^2.  This is the convention
    with (e^I, e^I) = 1 (equivalently the 1/k!-normalised ordered sum); the
    "ordered" convention multiplies by k!.
    """
    if alpha.degree != beta.degree:
        raise DegreeMismatch("inner_perturbed needs equal degrees")
    k = alpha.degree
    ring = alpha.ring
    acc = Jet2(ring.zero(), ring=ring)
    for I, ca in alpha.terms.items():
        for J, cb in beta.terms.items():
            block = [[ginv[i][j] for j in J] for i in I]
            d = _det_jet(block, ring) if k else Jet2(ring.one(), ring=ring)
            acc = acc + d * Jet2.from_poly(ca * cb)
    if convention == "ordered":
        fact = 1
        for m in range(2, k + 1):
            fact *= m
        acc = acc * Jet2(ring.const(fact), ring=ring)
    elif convention != "unit":
        raise ValueError("convention must be 'unit' or 'ordered'")
    return acc * volratio


class Jet2:
    """c0 + c1*s + c2*s^2 with Poly coefficients, products truncated at s^2."""

    __slots__ = ("c0", "c1", "c2", "ring")

    def __init__(self, c0, c1=None, c2=None, ring: Ring = RING):
        self.ring = ring
        self.c0 = c0 if isinstance(c0, Poly) else ring.const(c0)
        self.c1 = c1 if isinstance(c1, Poly) else ring.const(c1 or 0)
        self.c2 = c2 if isinstance(c2, Poly) else ring.const(c2 or 0)

    @classmethod
    def from_poly(cls, p: Poly) -> "Jet2":
        """Split a polynomial by powers of s, truncating at s^2."""
        return cls(p.coefficient("s", 0), p.coefficient("s", 1),
                   p.coefficient("s", 2), ring=p.ring)

    def __bool__(self):
        return bool(self.c0 or self.c1 or self.c2)

    def __eq__(self, other):
        return (isinstance(other, Jet2) and self.c0 == other.c0
                and self.c1 == other.c1 and self.c2 == other.c2)

    def __neg__(self):
        return Jet2(-self.c0, -self.c1, -self.c2, ring=self.ring)

    def __add__(self, other):
        other = self._lift(other)
        return Jet2(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2,
                    ring=self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        return Jet2(self.c0 * other.c0,
                    self.c0 * other.c1 + self.c1 * other.c0,
                    self.c0 * other.c2 + self.c1 * other.c1 + self.c2 * other.c0,
                    ring=self.ring)

    __rmul__ = __mul__

    def _lift(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        if isinstance(other, Poly):
            return Jet2(other, ring=self.ring)
        return Jet2(self.ring.const(other), ring=self.ring)

    def shift(self) -> "Jet2":
        """Multiply by s (dropping the former s^2 coefficient)."""
        return Jet2(self.ring.zero(), self.c0, self.c1, ring=self.ring)

    def inverse(self) -> "Jet2":
        c0 = self.c0
        if not c0.is_constant() or not c0.constant():
            raise ZeroDivisionError("jet inverse needs invertible scalar lead")
        k = Fraction(1) / c0.constant()
        u1 = self.c1 * k
        u2 = self.c2 * k
        return Jet2(self.ring.const(k), -(u1 * k), (u1 * u1 - u2) * k,
                    ring=self.ring)

    def fractional_power(self, num: int, den: int) -> "Jet2":
        """(1 + c1 s + c2 s^2)^(num/den) by the binomial series; lead must be 1."""
        if self.c0 != self.ring.one():
            raise ZeroDivisionError("fractional power needs unit leading term")
        p = Fraction(num, den)
        u1, u2 = self.c1, self.c2
        return Jet2(self.ring.one(), u1 * p,
                    u2 * p + (u1 * u1) * (p * (p - 1) / 2), ring=self.ring)

    def __repr__(self):
        return (f"Jet2({self.c0.text()} | {self.c1.text()} | {self.c2.text()})")
