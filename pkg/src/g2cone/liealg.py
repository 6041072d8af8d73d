"""Exact u(3)/su(3) matrix algebra, basis calibration and coordinate derivations.

The nine-element basis is (e1..e6, h1, h2, h3) with h_j = i*E_jj and the e's
built from off-diagonal elementary matrices; the printed source list contains
index typos, so the six e-signs are pinned by an exhaustive calibration search
(see :mod:`g2cone.calibration`) rather than by convention.  The inner product
is <A,B> = -1/2 Re tr(AB), which makes {e_i, sqrt(2) h_j} orthonormal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CalibrationFailed
from .poly import Poly, RING, v, x
from .scalars import GaussRational, I

Matrix3Data = tuple[tuple[GaussRational, ...], ...]

_ZERO = GaussRational(0)


class Matrix3:
    """3x3 matrix over Gaussian rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(_gr(c) for c in r) for r in rows)

    def __eq__(self, other):
        return isinstance(other, Matrix3) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return Matrix3(tuple(tuple(a + b for a, b in zip(r1, r2))
                             for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return Matrix3(tuple(tuple(a - b for a, b in zip(r1, r2))
                             for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix3(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix3):
            return Matrix3(tuple(
                tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(3)),
                          _ZERO) for j in range(3))
                for i in range(3)))
        return Matrix3(tuple(tuple(a * other for a in r) for r in self.rows))

    __rmul__ = __mul__

    def dagger(self) -> "Matrix3":
        return Matrix3(tuple(tuple(self.rows[j][i].conjugate() for j in range(3))
                             for i in range(3)))

    def trace(self) -> GaussRational:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def is_anti_hermitian(self) -> bool:
        return self.dagger() == -self

    def is_zero(self) -> bool:
        return all(not c for r in self.rows for c in r)

    def to_complex(self):
        return [[complex(c) for c in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix3({self.rows!r})"


def _gr(c) -> GaussRational:
    if isinstance(c, GaussRational):
        return c
    return GaussRational(c)


def zeros() -> Matrix3:
    return Matrix3(((0, 0, 0),) * 3)


def elementary(i: int, j: int) -> Matrix3:
    """E_ij: 1 in position (i,j), zero elsewhere (1-based indices)."""
    rows = [[GaussRational(0)] * 3 for _ in range(3)]
    rows[i - 1][j - 1] = GaussRational(1)
    return Matrix3(rows)


def bracket(A: Matrix3, B: Matrix3) -> Matrix3:
    """Matrix commutator AB - BA, exactly."""
    return A * B - B * A


def inner(A: Matrix3, B: Matrix3) -> Fraction:
    """<A,B> = -1/2 Re tr(AB); makes {e_i, sqrt(2) h_j} orthonormal."""
    t = (A * B).trace()
    return -t.re / 2


@dataclass(frozen=True)
class LieBasis:
    """Calibrated ordered basis (e1..e6, h1, h2, h3) with its sign vector."""

    matrices: tuple[Matrix3, ...]
    sigma: tuple[int, ...]

    @property
    def e(self):
        return self.matrices[:6]

    @property
    def h(self):
        return self.matrices[6:]

    def norms_sq(self) -> tuple[Fraction, ...]:
        return tuple(inner(m, m) for m in self.matrices)

    def gram(self):
        return [[inner(a, b) for b in self.matrices] for a in self.matrices]


def build_basis(sigma=(1,) * 6) -> LieBasis:
    """Basis matrices for a given e-sign assignment.

    The reference shapes (sigma all +1) are
      e1 = E21-E12, e3 = E31-E13, e5 = E32-E23,
      e2 = i(E12+E21), e4 = i(E31+E13), e6 = i(E23+E32),
      h_j = i E_jj.
    """
    E = elementary
    base = (
        E(2, 1) - E(1, 2),
        I * (E(1, 2) + E(2, 1)),
        E(3, 1) - E(1, 3),
        I * (E(3, 1) + E(1, 3)),
        E(3, 2) - E(2, 3),
        I * (E(2, 3) + E(3, 2)),
    )
    es = tuple(m if s == 1 else -m for m, s in zip(base, sigma))
    hs = tuple(I * E(j, j) for j in (1, 2, 3))
    return LieBasis(es + hs, tuple(sigma))


BASIS_NAMES = ("e1", "e2", "e3", "e4", "e5", "e6", "h1", "h2", "h3")


@dataclass(frozen=True)
class StructureConstants:
    """c[i][j][k] with [b_i, b_j] = sum_k c_ijk b_k over the 9-element basis."""

    c: tuple

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.c[i][j][k]

    def jacobi_residual(self) -> Fraction:
        """Max |sum over cyclic (c_ij^m c_mk^l)| over all index tuples."""
        sparse = {}
        for i in range(9):
            for j in range(9):
                row = {k: val for k, val in enumerate(self.c[i][j]) if val}
                if row:
                    sparse[(i, j)] = row
        worst = Fraction(0)
        for i in range(9):
            for j in range(9):
                for k in range(9):
                    acc: dict = {}
                    for (p, q, r) in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, cm in sparse.get((p, q), {}).items():
                            for l, cl in sparse.get((m, r), {}).items():
                                acc[l] = acc.get(l, Fraction(0)) + cm * cl
                    for val in acc.values():
                        worst = max(worst, abs(val))
        return worst

    def to_json_table(self) -> dict:
        out = {}
        for i in range(9):
            for j in range(9):
                for k in range(9):
                    val = self.c[i][j][k]
                    if val:
                        out[f"{BASIS_NAMES[i]},{BASIS_NAMES[j]},{BASIS_NAMES[k]}"] = {
                            "num": val.numerator, "den": val.denominator}
        return dict(sorted(out.items()))


def structure_constants(basis: LieBasis) -> StructureConstants:
    """Expand every bracket over the basis. The basis is orthogonal for <.,.>,
    so coefficients come from inner products divided by the norm squares."""
    norms = basis.norms_sq()
    table = []
    for i in range(9):
        row = []
        for j in range(9):
            br = bracket(basis.matrices[i], basis.matrices[j])
            coeffs = tuple(inner(br, basis.matrices[k]) / norms[k] for k in range(9))
            # exactness check: the expansion must reconstruct the bracket
            recon = zeros()
            for k in range(9):
                if coeffs[k]:
                    recon = recon + coeffs[k] * basis.matrices[k]
            if not (recon - br).is_zero():
                raise CalibrationFailed(
                    f"bracket [{BASIS_NAMES[i]},{BASIS_NAMES[j]}] not in basis span")
            row.append(coeffs)
        table.append(tuple(row))
    return StructureConstants(tuple(table))


# -- coordinate derivations ---------------------------------------------------

COORD_NAMES = ("x1", "x2", "x3", "x4", "x5", "x6", "v1", "v2", "v3")


def _coord_poly(k: int) -> Poly:
    """The coordinate paired with basis slot k: x_i for e_i, v_j for h_j."""
    return x(k + 1) if k < 6 else v(k - 5)


def derivation_table(sc: StructureConstants) -> tuple[tuple[Poly, ...], ...]:
    """D[j][m] = derivative of coordinate m along left-invariant field b_j.

    Differentiating x_m(u) = <Ad_{u^{-1}} zeta, b_m> along b_j gives
    <Ad_{u^{-1}} zeta, [b_j, b_m]>, which re-expands linearly in the
    coordinates through the structure constants.
    """
    rows = []
    for j in range(9):
        row = []
        for m in range(9):
            p = RING.zero()
            for k in range(9):
                coef = sc.c[j][m][k]
                if coef:
                    p = p + coef * _coord_poly(k)
            row.append(p)
        rows.append(tuple(row))
    return tuple(rows)


def derive_poly(dtable, j: int, p: Poly) -> Poly:
    """Derivation along b_j extended to polynomials by the chain rule."""
    out = RING.zero()
    for m, name in enumerate(COORD_NAMES[:8]):
        # stored variables are x1..x6, v1, v2; v3 never appears explicitly
        dp = p.diff(name)
        if dp:
            out = out + dp * dtable[j][m]
    return out


def derive_coordinate(dtable, j: int, coordinate: str) -> Poly:
    """Derivative of one coordinate function (x1..x6, v1..v3) along b_j."""
    m = COORD_NAMES.index(coordinate)
    return dtable[j][m]


def calibrate_basis() -> LieBasis:
    """The sign assignment passing the structure identities (cached search)."""
    from .calibration import get_context

    return get_context().basis
