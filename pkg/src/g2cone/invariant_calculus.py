"""Exterior derivative, codifferential and Laplacian on invariant-coefficient forms.

Forms live on U(3) with the nine-slot coframe; the differential combines the
Maurer-Cartan structure equations with the coordinate derivations of
:mod:`g2cone.liealg`.  Projectable (basic) forms descend to the flag manifold,
where the codifferential is -*d* on every degree (six dimensions).
"""

from __future__ import annotations

from .errors import IdentityFailed, VerticalComponent
from . import liealg
from .forms import (
    Form, alpha_op, basis_form, contract, contract_vector, frame_inner, hodge6,
    j_one_form, killing_one_form, project2, re_omega3, wedge, zero_form,
)
from .poly import RING


class Context:
    """Calibrated structure data every differential operator depends on."""

    __slots__ = ("basis", "sc", "dtable", "mc_sign", "coframe_d", "alpha_kappa")

    def __init__(self, basis: liealg.LieBasis, mc_sign: int):
        self.basis = basis
        self.sc = liealg.structure_constants(basis)
        self.dtable = liealg.derivation_table(self.sc)
        self.mc_sign = mc_sign
        self.coframe_d = self._coframe_differentials()
        self.alpha_kappa = None

    def _coframe_differentials(self):
        """d(theta^k) = mc_sign * 1/2 c_ij^k theta^i ^ theta^j."""
        out = []
        for k in range(9):
            f = zero_form(2)
            for i in range(9):
                for j in range(i + 1, 9):
                    c = self.sc.c[i][j][k]
                    if c:
                        f = f + basis_form(i, j) * (self.mc_sign * c)
            out.append(f)
        return tuple(out)


def d_inv(alpha: Form, ctx: Context | None = None) -> Form:
    """Exterior derivative of an invariant-coefficient form."""
    ctx = ctx or _default()
    out = zero_form(alpha.degree + 1, alpha.nslots, alpha.ring)
    for idx, coeff in alpha.terms.items():
        base = Form(len(idx), {idx: RING.one()})
        # coefficient part: sum_j (b_j . P) theta^j ^ e^I
        for j in range(9):
            dp = liealg.derive_poly(ctx.dtable, j, coeff)
            if dp:
                out = out + wedge(basis_form(j) * dp, base)
        # structural part: P * d(e^I) by the graded Leibniz rule
        for pos, slot in enumerate(idx):
            rest = idx[:pos] + idx[pos + 1:]
            piece = wedge(ctx.coframe_d[slot],
                          Form(len(rest), {rest: coeff}) if rest
                          else Form(0, {(): coeff}))
            out = out + (piece if pos % 2 == 0 else -piece)
    return out


def lie_h(alpha: Form, j: int, ctx: Context | None = None) -> Form:
    """Lie derivative along the vertical frame field h_j (Cartan formula)."""
    ctx = ctx or _default()
    slot = 6 + j
    return contract(slot, d_inv(alpha, ctx)) + d_inv(contract(slot, alpha), ctx)


def is_projectable(alpha: Form, ctx: Context | None = None) -> bool:
    """True iff alpha has no h-components and is annihilated by all h-derivations."""
    ctx = ctx or _default()
    if not alpha.is_tangential():
        return False
    return all(not lie_h(alpha, j, ctx) for j in range(3))


def codiff(alpha: Form, ctx: Context | None = None, *, checked: bool = True) -> Form:
    """Codifferential -*d* on projectable tangential forms (any degree)."""
    ctx = ctx or _default()
    if checked and not is_projectable(alpha, ctx):
        raise VerticalComponent("codiff requires a projectable form")
    if alpha.degree == 0:
        return zero_form(0, alpha.nslots, alpha.ring)
    return -hodge6(d_inv(hodge6(alpha), ctx))


def laplacian(alpha: Form, ctx: Context | None = None) -> Form:
    """Hodge Laplacian d d* + d* d on projectable forms."""
    ctx = ctx or _default()
    if not is_projectable(alpha, ctx):
        raise VerticalComponent("laplacian requires a projectable form")
    out = d_inv(codiff(alpha, ctx, checked=False), ctx)
    return out + codiff(d_inv(alpha, ctx), ctx, checked=False)


def killing_identity_report(ctx: Context | None = None) -> list[dict]:
    """Verify the Killing-field identities for K = sum x_i e^i, symbolically.

    The x-variables are linear coordinates of the generator zeta, so one
    symbolic pass covers all eight su(3) generators at once.
    """
    ctx = ctx or _default()
    K = killing_one_form()
    JK = j_one_form(K)
    rw = re_omega3()
    dJK = d_inv(JK, ctx)
    checks = []

    def add(name, residual):
        checks.append({"identity": name, "status": "pass" if not residual else "fail",
                       "residual": None if not residual else residual.text()})

    add("d*K = 0", codiff(K, ctx))
    add("d*(JK) = 0", codiff(JK, ctx))
    add("alpha(dJK) = -6K", alpha_op(dJK, kappa=ctx.alpha_kappa) + 6 * K)
    add("pi8(dJK) = 0", project2(dJK, 8))
    add("Lap(JK) = 18 JK", laplacian(JK, ctx) - 18 * JK)
    K_rw = contract_vector([K.component((i,)) for i in range(6)], rw)
    add("(dd*+d*d)(JK) - d*(K . ReOmega) = 24 JK",
        laplacian(JK, ctx) - codiff(K_rw, ctx) - 24 * JK)
    # d* alpha dJ = -4 d* exercised on K (d*K = 0 makes the LHS vanish too);
    # the genuine content is on JK where d*(JK) = 0 as well, so check the
    # composite on the dJK route instead: alpha(dJK) is proportional to K,
    # hence d*(alpha(dJ K)) = -6 d*K = 0.
    add("d* alpha dJ K = -4 d* K", codiff(alpha_op(dJK, kappa=ctx.alpha_kappa), ctx))
    for c in checks:
        if c["status"] == "fail":
            raise IdentityFailed(c["identity"])
    return checks


_DEFAULT: Context | None = None


def _default() -> Context:
    global _DEFAULT
    if _DEFAULT is None:
        from .calibration import get_context

        _DEFAULT = get_context()
    return _DEFAULT
