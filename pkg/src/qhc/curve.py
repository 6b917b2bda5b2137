"""Quasi-homogeneous plane curves k[x,y]/(f).

Weight inference, factorization of f into axis and binomial branches,
per-branch normalization maps into k[t_i], and exact graded membership
in the image of the normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import ConsistencyError, InputError
from .field import FieldElement, NumberField, as_fraction
from .poly import BiPoly, UniPoly, monomials_of_weight


class BranchKind(Enum):
    AXIS_X = "axis_x"  # f_i = x
    AXIS_Y = "axis_y"  # f_i = y
    BINOMIAL = "binomial"  # f_i = x^{w_y} + a_i * y^{w_x}


@dataclass(frozen=True)
class Branch:
    kind: BranchKind
    a: Optional[FieldElement]  # binomial coefficient, None for axis kinds
    b: Optional[FieldElement]  # root of a*b^{w_x} = -1, None for axis kinds
    weight: int  # w_i = deg(f_i)
    t_degree: int  # d_i = deg(t_i)
    conductor: int  # c(A_i)
    nx: UniPoly  # n_i(x)
    ny: UniPoly  # n_i(y)

    def poly(self, field: NumberField, wx: int, wy: int) -> BiPoly:
        if self.kind is BranchKind.AXIS_X:
            return BiPoly.monomial(field, field.one(), 1, 0)
        if self.kind is BranchKind.AXIS_Y:
            return BiPoly.monomial(field, field.one(), 0, 1)
        return BiPoly.make(field, {(wy, 0): field.one(), (0, wx): self.a})


def branch_conductor(kind: BranchKind, wx: int, wy: int) -> int:
    """c(A_i): zero for smooth axis branches, (w_x-1)(w_y-1) otherwise."""
    if kind is BranchKind.BINOMIAL:
        return (wx - 1) * (wy - 1)
    return 0


def _make_branch(
    kind: BranchKind,
    field: NumberField,
    wx: int,
    wy: int,
    a: Optional[FieldElement] = None,
    b: Optional[FieldElement] = None,
) -> Branch:
    one = field.one()
    t = UniPoly.monomial(field, one, 1)
    zero = UniPoly.zero(field)
    if kind is BranchKind.AXIS_X:
        return Branch(kind, None, None, wx, wy, 0, zero, t)
    if kind is BranchKind.AXIS_Y:
        return Branch(kind, None, None, wy, wx, 0, t, zero)
    if a is None or b is None:
        raise InputError("binomial branch needs both a and b")
    if not a:
        raise InputError("binomial coefficient a must be nonzero")
    if a * b ** wx != -one:
        raise InputError("branch data violates a*b^w_x = -1")
    nx = UniPoly.monomial(field, one, wx)
    ny = UniPoly.monomial(field, b, wy)
    return Branch(kind, a, b, wx * wy, 1, branch_conductor(kind, wx, wy), nx, ny)


def infer_weights(f: BiPoly) -> Tuple[int, int]:
    """The unique coprime positive weights making f homogeneous."""
    exps = [e for e, _ in f.terms]
    if not exps:
        raise InputError("cannot infer weights of the zero polynomial")
    base = exps[0]
    ratio = None  # (wx, wy) up to scaling
    for a, b in exps[1:]:
        da, db = a - base[0], b - base[1]
        if da == 0 and db == 0:
            continue
        if da == 0 or db == 0:
            raise InputError("not quasi-homogeneous")
        # da*wx + db*wy = 0 with positive weights needs opposite signs.
        if (da > 0) == (db > 0):
            raise InputError("not quasi-homogeneous")
        g = math.gcd(abs(da), abs(db))
        cand = (abs(db) // g, abs(da) // g)
        if ratio is None:
            ratio = cand
        elif ratio != cand:
            raise InputError("not quasi-homogeneous")
    if ratio is None:
        raise InputError("ambiguous")
    return ratio


def rational_roots(coeffs: Sequence[Fraction]) -> List[Tuple[Fraction, int]]:
    """Rational roots with multiplicity, sorted by (numerator, denominator).

    coeffs are low-first rational coefficients of a nonzero polynomial.
    """
    coeffs = [as_fraction(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise InputError("root finding on the zero polynomial")
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]
    zero_mult = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        zero_mult += 1

    def divisors(n: int) -> List[int]:
        n = abs(n)
        out = []
        for d in range(1, int(math.isqrt(n)) + 1):
            if n % d == 0:
                out.append(d)
                out.append(n // d)
        return sorted(set(out))

    candidates = set()
    if ints:
        for p in divisors(ints[0]):
            for q in divisors(ints[-1]):
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
    roots = []
    if zero_mult:
        roots.append((Fraction(0), zero_mult))

    def eval_at(cs, r):
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * r + c
        return acc

    def deflate(cs, r):
        # synthetic division by (x - r), exact by assumption
        out = []
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * r + c
            out.append(acc)
        out.pop()  # remainder, zero
        return list(reversed(out))

    work = [Fraction(c) for c in ints]
    for r in sorted(candidates, key=lambda q: (q.numerator, q.denominator)):
        if len(work) <= 1:
            break
        mult = 0
        while len(work) > 1 and eval_at(work, r) == 0:
            work = deflate(work, r)
            mult += 1
        if mult:
            roots.append((r, mult))
    return sorted(roots, key=lambda t: (t[0].numerator, t[0].denominator))


def factor(
    f: BiPoly, weights: Tuple[int, int], field: NumberField
) -> Tuple[FieldElement, List[Branch]]:
    """Factor f = u * f_1 ... f_r into axis and binomial branches.

    Automatic root extraction works over Q only; over an extension the
    caller must supply the branch list explicitly (see QuasiCurve.create).
    """
    wx, wy = weights
    if math.gcd(wx, wy) != 1 or wx <= 0 or wy <= 0:
        raise InputError("weights must be positive and coprime")
    f.weighted_degree(wx, wy)  # validates homogeneity
    exps = [e for e, _ in f.terms]
    min_x = min(a for a, _ in exps)
    min_y = min(b for _, b in exps)
    if min_x > 1 or min_y > 1:
        raise InputError("not reduced")
    branches: List[Branch] = []
    rest = f
    if min_x:
        branches.append(_make_branch(BranchKind.AXIS_X, field, wx, wy))
        rest = rest.exact_div(BiPoly.monomial(field, field.one(), 1, 0))
    if min_y:
        branches.append(_make_branch(BranchKind.AXIS_Y, field, wx, wy))
        rest = rest.exact_div(BiPoly.monomial(field, field.one(), 0, 1))
    unit = field.one()
    if len(rest.terms) == 1 and rest.terms[0][0] == (0, 0):
        unit = rest.terms[0][1]
    elif rest.terms:
        # rest = x^{s*wy} * P(y^{wx}/x^{wy}); c_j is the coefficient of
        # x^{(s-j)wy} y^{j*wx}.
        w_rest = rest.weighted_degree(wx, wy)
        if w_rest % (wx * wy) != 0:
            raise ConsistencyError("mixed factor has unexpected weight %d" % w_rest)
        s = w_rest // (wx * wy)
        coeffs = [field.zero()] * (s + 1)
        for (a, b), c in rest.terms:
            if b % wx != 0 or a != (s - b // wx) * wy:
                raise ConsistencyError("unexpected monomial in mixed factor")
            coeffs[b // wx] = c
        if field.degree != 1:
            raise InputError(
                "root not in field: explicit branches required over an extension"
            )
        rat = [c.as_rational() for c in coeffs]
        roots = rational_roots(rat)
        total = sum(m for _, m in roots)
        if any(m > 1 for _, m in roots):
            raise InputError("not reduced")
        if total != s:
            residual = rat
            for r, _ in roots:
                # deflate for the error message
                out = []
                acc = Fraction(0)
                for c in reversed(residual):
                    acc = acc * r + c
                    out.append(acc)
                out.pop()
                residual = list(reversed(out))
            raise InputError(
                "root not in field: %s"
                % " + ".join(
                    "%s*u^%d" % (c, i) for i, c in enumerate(residual) if c
                )
            )
        # g = unit * x^{s*wy} * prod(1 + a_i u) with u = y^{wx}/x^{wy},
        # so the unit is the coefficient of the pure-x term.
        unit = coeffs[0]
        for rho, _ in roots:
            if rho == 0:
                raise ConsistencyError("zero root after axis extraction")
            a_val = field.from_rational(Fraction(-1) / rho)
            b_val = _solve_b(field, a_val, wx)
            branches.append(
                _make_branch(BranchKind.BINOMIAL, field, wx, wy, a_val, b_val)
            )
    _verify_product(f, unit, branches, field, wx, wy)
    return unit, _order_branches(branches)


def _solve_b(field: NumberField, a: FieldElement, wx: int) -> FieldElement:
    """Deterministic rational root b of a*b^wx = -1; Q only."""
    if field.degree != 1:
        raise InputError("b_i not in field: supply explicit branches")
    target = (-field.one()) / a  # b^wx = -1/a
    # roots of X^wx - target over Q
    coeffs = [-target.as_rational()] + [Fraction(0)] * (wx - 1) + [Fraction(1)]
    roots = rational_roots(coeffs)
    if not roots:
        raise InputError("b_i not in field: u^%d + %s" % (wx, (field.one() / a)))
    return field.from_rational(roots[0][0])


def _order_branches(branches: List[Branch]) -> List[Branch]:
    def key(br: Branch):
        if br.kind is BranchKind.AXIS_X:
            return (0, ())
        if br.kind is BranchKind.AXIS_Y:
            return (1, ())
        coords = tuple((c.numerator, c.denominator) for c in br.a.coords)
        return (2, coords)

    return sorted(branches, key=key)


def _verify_product(
    f: BiPoly,
    unit: FieldElement,
    branches: List[Branch],
    field: NumberField,
    wx: int,
    wy: int,
) -> None:
    prod = BiPoly.monomial(field, unit, 0, 0)
    for br in branches:
        prod = prod * br.poly(field, wx, wy)
    if prod != f:
        raise ConsistencyError("branch product does not expand to f")


@dataclass(frozen=True)
class QuasiCurve:
    field: NumberField
    wx: int
    wy: int
    f: BiPoly
    wf: int
    unit: FieldElement
    branches: tuple

    @staticmethod
    def create(
        field: NumberField,
        f: BiPoly,
        weights: Optional[Tuple[int, int]] = None,
        branches: Optional[Sequence[Tuple[BranchKind, Optional[FieldElement], Optional[FieldElement]]]] = None,
    ) -> "QuasiCurve":
        if not f:
            raise InputError("f must be nonzero")
        if weights is None:
            weights = infer_weights(f)
        wx, wy = weights
        if wx <= 0 or wy <= 0 or math.gcd(wx, wy) != 1:
            raise InputError("weights must be positive and coprime")
        wf = f.weighted_degree(wx, wy)
        if wf <= 0:
            raise InputError("f must have positive weight")
        if branches is None:
            unit, blist = factor(f, weights, field)
        else:
            blist = [
                _make_branch(kind, field, wx, wy, a, b) for kind, a, b in branches
            ]
            seen = set()
            for br in blist:
                key = (br.kind, br.a.coords if br.a is not None else None)
                if key in seen:
                    raise InputError("not reduced")
                seen.add(key)
            prod = BiPoly.monomial(field, field.one(), 0, 0)
            for br in blist:
                prod = prod * br.poly(field, wx, wy)
            lead = prod.terms[-1]
            unit = f.as_dict().get(lead[0])
            if unit is None:
                raise InputError("branch product does not match f")
            unit = unit / lead[1]
            if prod.scale(unit) != f:
                raise InputError("branch product does not match f")
            blist = _order_branches(blist)
        curve = QuasiCurve(field, wx, wy, f, wf, unit, tuple(blist))
        for i, br in enumerate(curve.branches):
            img = f.evaluate(br.nx, br.ny)
            if img:
                raise ConsistencyError("n_%d(f) != 0" % (i + 1))
        return curve

    @property
    def r(self) -> int:
        return len(self.branches)

    def normalization_image(self, h: BiPoly) -> List[UniPoly]:
        """n(h): the per-branch images under the normalization map."""
        return [h.evaluate(br.nx, br.ny) for br in self.branches]

    def monomial_image(self, xe: int, ye: int) -> List[UniPoly]:
        return self.normalization_image(
            BiPoly.monomial(self.field, self.field.one(), xe, ye)
        )

    def image_membership(
        self, target: Sequence[UniPoly], w: int
    ) -> Optional[List[Tuple[Tuple[int, int], FieldElement]]]:
        """Express a homogeneous degree-w vector of ~A in the image of n.

        target has one UniPoly per branch, each zero or a monomial of
        degree w.  Returns the witness combination of monomials of k[x,y]
        or None when the vector is not in the image of A.
        """
        if not any(target):
            return []
        rows = []  # (branch index, t-exponent) coordinates
        for i, br in enumerate(self.branches):
            if w % br.t_degree == 0 and w >= 0:
                rows.append((i, w // br.t_degree))
        row_index = {key: pos for pos, key in enumerate(rows)}
        rhs = [self.field.zero()] * len(rows)
        for i, p in enumerate(target):
            for e, c in p.terms:
                key = (i, e)
                if key not in row_index:
                    return None  # wrong degree: cannot be hit by degree-w piece
                rhs[row_index[key]] = c
        monos = monomials_of_weight(self.wx, self.wy, w)
        cols = []
        for a, b in monos:
            img = self.monomial_image(a, b)
            col = [self.field.zero()] * len(rows)
            for i, p in enumerate(img):
                for e, c in p.terms:
                    col[row_index[(i, e)]] = c
            cols.append(col)
        if not rows:
            return None
        matrix = [[cols[j][k] for j in range(len(cols))] for k in range(len(rows))]
        sol = linalg.solve(matrix, rhs, self.field)
        if sol is None:
            return None
        return [(monos[j], c) for j, c in enumerate(sol) if c]
