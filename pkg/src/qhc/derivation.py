"""Euler and Koszul derivations and their extensions to the normalization.

A derivation on A is stored through its coordinate images (P(x), P(y));
its canonical extension to k[t_1] x ... x k[t_r] is a vector of
coefficients delta_i with ~P_i = delta_i(t_i) * d/dt_i, solved branch by
branch from the chain rule and cross-checked on the other coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .curve import BranchKind, QuasiCurve
from .errors import ConsistencyError, InputError
from .field import FieldElement
from .poly import BiPoly, UniPoly
from .semigroup import gamma_formula


@dataclass(frozen=True)
class DerivationOnA:
    px: BiPoly  # image of x
    py: BiPoly  # image of y
    weight: int

    def apply(self, h: BiPoly) -> BiPoly:
        return self.px * h.dx() + self.py * h.dy()


@dataclass(frozen=True)
class ExtendedDerivation:
    deltas: tuple  # one UniPoly per branch

    def apply(self, vec: List[UniPoly]) -> List[UniPoly]:
        return [d * p.derivative() for d, p in zip(self.deltas, vec)]


@dataclass(frozen=True)
class KoszulData:
    betas: tuple  # beta_i in k^*
    conductors: tuple  # c_i


@dataclass(frozen=True)
class QElement:
    """q = ((beta_1/d_1) t_1^{g_1}, ..., (beta_r/d_r) t_r^{g_r})."""

    coeffs: tuple  # FieldElement per branch
    exps: tuple  # g_i per branch

    def as_vector(self, curve: QuasiCurve) -> List[UniPoly]:
        return [
            UniPoly.monomial(curve.field, c, e)
            for c, e in zip(self.coeffs, self.exps)
        ]


def euler(curve: QuasiCurve) -> DerivationOnA:
    """E = w_x x d/dx + w_y y d/dy, homogeneous of weight 0."""
    fld = curve.field
    px = BiPoly.monomial(fld, fld.from_rational(curve.wx), 1, 0)
    py = BiPoly.monomial(fld, fld.from_rational(curve.wy), 0, 1)
    return DerivationOnA(px, py, 0)


def koszul(curve: QuasiCurve) -> DerivationOnA:
    """D = f_y d/dx - f_x d/dy, homogeneous of weight w_f - w_x - w_y."""
    return DerivationOnA(
        curve.f.dy(), -curve.f.dx(), curve.wf - curve.wx - curve.wy
    )


def preserves_ideal(curve: QuasiCurve, P: DerivationOnA) -> bool:
    """Whether P(f) lies in (f), i.e. P descends to A = k[x,y]/(f)."""
    return not any(curve.normalization_image(P.apply(curve.f)))


def extend(curve: QuasiCurve, P: DerivationOnA) -> ExtendedDerivation:
    """Canonical extension of P to the normalization, one delta per branch.

    delta_i is solved from the chain rule on a coordinate with nonzero
    image (y for the x-axis branch, x otherwise) and verified on the
    other coordinate.
    """
    if not preserves_ideal(curve, P):
        raise InputError("derivation does not preserve the ideal (f)")
    npx = curve.normalization_image(P.px)
    npy = curve.normalization_image(P.py)
    fld = curve.field
    deltas = []
    for i, br in enumerate(curve.branches):
        if br.kind is BranchKind.AXIS_X:
            # n(x) = 0, n(y) = t: delta * 1 = n(P(y)), and n(P(x)) must vanish
            delta = npy[i]
            if npx[i]:
                raise InputError("inconsistent extension on branch %d" % (i + 1))
        else:
            dnx = br.nx.derivative()
            delta = npx[i].exact_div(dnx) if npx[i] else UniPoly.zero(fld)
            if npx[i] and delta * dnx != npx[i]:
                raise InputError("inconsistent extension on branch %d" % (i + 1))
            if delta * br.ny.derivative() != npy[i]:
                raise InputError("inconsistent extension on branch %d" % (i + 1))
        deltas.append(delta)
    return ExtendedDerivation(tuple(deltas))


def extension_applies(
    curve: QuasiCurve, P: DerivationOnA, ext: ExtendedDerivation, h: BiPoly
) -> bool:
    """Defining property of the extension: n(P(h)) = ~P(n(h))."""
    lhs = curve.normalization_image(P.apply(h))
    rhs = ext.apply(curve.normalization_image(h))
    return lhs == rhs


def koszul_data(curve: QuasiCurve) -> KoszulData:
    """beta_i and c_i read off the extended Koszul derivation.

    Each delta_i must be a monomial beta_i t^{c_i} with c_i matching the
    semigroup conductor; anything else is an internal inconsistency.
    """
    ext = extend(curve, koszul(curve))
    betas = []
    conductors = []
    for i, delta in enumerate(ext.deltas):
        if not delta:
            raise ConsistencyError("extended Koszul delta vanishes on branch %d" % (i + 1))
        beta, c = delta.monomial_parts()
        expected = gamma_formula(curve, i).conductor
        if c != expected:
            raise ConsistencyError(
                "Koszul exponent %d != semigroup conductor %d on branch %d"
                % (c, expected, i + 1)
            )
        betas.append(beta)
        conductors.append(c)
    return KoszulData(tuple(betas), tuple(conductors))


def q_element(curve: QuasiCurve) -> QElement:
    """q with ~D = q * ~E, verified together with q*x, q*y in A."""
    data = koszul_data(curve)
    fld = curve.field
    coeffs = []
    exps = []
    for i, br in enumerate(curve.branches):
        g = data.conductors[i] - 1
        if g < 0:
            raise InputError(
                "q is not defined for a smooth branch (negative Frobenius number)"
            )
        coeffs.append(data.betas[i] / fld.from_rational(br.t_degree))
        exps.append(g)
    q = QElement(tuple(coeffs), tuple(exps))
    # ~D = q * ~E componentwise
    ext_d = extend(curve, koszul(curve))
    ext_e = extend(curve, euler(curve))
    qvec = q.as_vector(curve)
    for i in range(curve.r):
        if qvec[i] * ext_e.deltas[i] != ext_d.deltas[i]:
            raise ConsistencyError("~D != q*~E on branch %d" % (i + 1))
    # q in (A:m): q*n(x) and q*n(y) are in the image of A
    lam = curve.wf - curve.wx - curve.wy
    for h, wh in ((curve.monomial_image(1, 0), curve.wx), (curve.monomial_image(0, 1), curve.wy)):
        prod = [qv * hv for qv, hv in zip(qvec, h)]
        if curve.image_membership(prod, lam + wh) is None:
            raise ConsistencyError("q*m does not land in A")
    return q


def commutator_is_scaled_koszul(curve: QuasiCurve) -> bool:
    """[E, D] = (w_f - w_x - w_y) * D as derivations on A (checked mod f)."""
    E = euler(curve)
    D = koszul(curve)
    lam = curve.wf - curve.wx - curve.wy
    x = BiPoly.monomial(curve.field, curve.field.one(), 1, 0)
    y = BiPoly.monomial(curve.field, curve.field.one(), 0, 1)
    for coord, d_img in ((x, D.px), (y, D.py)):
        comm = E.apply(D.apply(coord)) - D.apply(E.apply(coord))
        diff = comm - d_img.scale(curve.field.from_rational(lam))
        if any(curve.normalization_image(diff)):
            return False
    return True
