"""Operator evaluation f(a) = sum_i f_i sigma^i(a) and its fast
primitives: annihilator polynomials, multi-point evaluation, and
interpolation, all divide-&-conquer with schoolbook inner products.

The operator evaluation map is F_q-linear in the point, its kernel is
an F_q-subspace of dimension at most deg f, and it satisfies the
product rule (f*g)(a) = f(g(a)).
"""

from __future__ import annotations

from .fields import fq_expand, fq_rank, rref_with_pivots, get_field, fqm_linear_solve
from .skewpoly import SkewPoly, SkewPolyRing

_MPE_BASE = 4


def op_eval(f: SkewPoly, alpha: int) -> int:
    field = f.ring.field
    sig = f.ring.sigma
    acc = 0
    for i, fi in enumerate(f.c):
        if fi:
            acc = field.add(acc, field.mul(fi, sig(alpha, i)))
    return acc


def _independent(field, elements) -> bool:
    rows = [[a] for a in elements]
    return fq_rank(field.q, fq_expand(field, rows, "row")) == len(rows)


def _span_basis(field, elements):
    """A maximal F_q-independent subset of the given elements."""
    fq = get_field(field.q, 1)
    picked, rows = [], []
    for a in elements:
        if a == 0:
            continue
        cand = rows + [list(field.coords(a))]
        if len(rref_with_pivots(fq, cand)[1]) == len(cand):
            picked.append(a)
            rows = cand
    return picked


def op_annihilator(ring: SkewPolyRing, U) -> SkewPoly:
    """The monic skew polynomial of degree |U| whose operator kernel is
    exactly the span of U.  Requires U to be F_q-independent.

    Split-evaluate-combine: with M1 annihilating the first half, the
    image of the second half under M1 is again independent and the
    combination is M2' * M1 by the product rule.
    """
    U = list(U)
    if not _independent(ring.field, U):
        raise ValueError("annihilator input must be F_q-independent")
    return _annihilator_rec(ring, U)


def _annihilator_rec(ring, U):
    if not U:
        return ring.one()
    if len(U) == 1:
        u = U[0]
        field = ring.field
        c = field.mul(ring.sigma(u), field.inv(u))
        return ring.poly([field.neg(c), 1])
    h = (len(U) + 1) // 2
    m1 = _annihilator_rec(ring, U[:h])
    images = [op_eval(m1, u) for u in U[h:]]
    m2 = _annihilator_rec(ring, images)
    return m2 * m1


def op_mpe(f: SkewPoly, alphas) -> list:
    """[f(a) for a in alphas] by recursive halving against annihilators
    of the halves' spans; equals naive op_eval pointwise."""
    alphas = list(alphas)
    if len(alphas) <= _MPE_BASE:
        return [op_eval(f, a) for a in alphas]
    ring = f.ring
    h = (len(alphas) + 1) // 2
    out = []
    for part in (alphas[:h], alphas[h:]):
        basis = _span_basis(ring.field, part)
        if basis:
            fp = f.rem_right(_annihilator_rec(ring, basis))
        else:
            fp = ring.zero()  # all points zero; evaluations are 0 anyway
        out.extend(op_mpe(fp, part))
    return out


def op_interpolate(ring: SkewPolyRing, points) -> SkewPoly:
    """The unique f with deg f < n and f(alpha_i) = r_i, for n
    F_q-independent alphas.

    Newton-style on the divide-&-conquer tree: interpolate the first
    half, then correct on the M1-images of the second half's points.
    """
    points = list(points)
    if not _independent(ring.field, [a for a, _ in points]):
        raise ValueError("interpolation points must be F_q-independent")
    return _interpolate_rec(ring, points)


def _interpolate_rec(ring, points):
    if not points:
        return ring.zero()
    if len(points) == 1:
        a, r = points[0]
        return ring.const(ring.field.div(r, a))
    h = (len(points) + 1) // 2
    p1, p2 = points[:h], points[h:]
    f1 = _interpolate_rec(ring, p1)
    m1 = _annihilator_rec(ring, [a for a, _ in p1])
    shifted = [(op_eval(m1, a), ring.field.sub(r, op_eval(f1, a)))
               for a, r in p2]
    g = _interpolate_rec(ring, shifted)
    return f1 + g * m1


# -- naive oracles (used by run_verify and the test suite) --------------------

def op_mpe_naive(f: SkewPoly, alphas) -> list:
    return [op_eval(f, a) for a in alphas]


def op_interpolate_naive(ring: SkewPolyRing, points) -> SkewPoly:
    """Solve the sigma-Vandermonde system V c = r, V[i][j] = sigma^j(a_i)."""
    n = len(points)
    field = ring.field
    V = [[ring.sigma(a, j) for j in range(n)] for a, _ in points]
    r = [r for _, r in points]
    c = fqm_linear_solve(field, V, r)
    return ring.poly(c)
