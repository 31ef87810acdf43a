"""Remainder evaluation f[a] = f rem_r (x - a) and its fast primitives:
remainder annihilators, P-independence, multi-point evaluation, and
interpolation.

Remainder evaluation is additive in f and obeys the product rule
(f*g)[a] = f[sigma(c) a / c] * c with c = g[a] (zero if c = 0).  A set
B is P-independent iff the monic generator of the left ideal of
polynomials vanishing on B has degree |B|.
"""

from __future__ import annotations

from .skewpoly import SkewPoly, SkewPolyRing, llcm


def rem_eval(f: SkewPoly, alpha: int) -> int:
    """f rem_r (x - alpha), via the recurrence N_0 = 1,
    N_j = sigma(N_{j-1}) * alpha for x^j rem_r (x - alpha)."""
    field = f.ring.field
    sig = f.ring.sigma
    acc, N = 0, 1
    for j, fj in enumerate(f.c):
        if j:
            N = field.mul(sig(N), alpha)
        if fj:
            acc = field.add(acc, field.mul(fj, N))
    return acc


def linear_factor(ring: SkewPolyRing, beta: int) -> SkewPoly:
    """x - beta."""
    return ring.poly([ring.field.neg(beta), 1])


def rem_annihilator(ring: SkewPolyRing, B) -> SkewPoly:
    """Monic generator of the left ideal of polynomials that
    remainder-vanish on all of B.  Accepts P-dependent input, in which
    case the degree is the P-rank of the closure (< |B|).

    Divide-&-conquer: the annihilator of a disjoint union is the llcm
    of the halves' annihilators.
    """
    B = list(B)
    if not B:
        return ring.one()
    if len(B) == 1:
        return linear_factor(ring, B[0])
    h = (len(B) + 1) // 2
    return llcm(rem_annihilator(ring, B[:h]), rem_annihilator(ring, B[h:]))


def p_independent(ring: SkewPolyRing, B) -> bool:
    B = list(B)
    return rem_annihilator(ring, B).degree == len(B)


_MPE_BASE = 4


def rem_mpe(f: SkewPoly, B) -> list:
    """[f[b] for b in B]; recursive halving through the halves'
    annihilators (f and f rem_r M agree on the zero set of M)."""
    B = list(B)
    if len(B) <= _MPE_BASE:
        return [rem_eval(f, b) for b in B]
    ring = f.ring
    h = (len(B) + 1) // 2
    out = []
    for part in (B[:h], B[h:]):
        fp = f.rem_right(rem_annihilator(ring, part))
        out.extend(rem_mpe(fp, part))
    return out


def rem_interpolate(ring: SkewPolyRing, B, r) -> SkewPoly:
    """The unique f with deg f < n and f[beta_i] = r_i on a
    P-independent list B.

    Combination: IP(B, r) = IP(B~1, r~1) * M_B2 + IP(B~2, r~2) * M_B1,
    where each point beta of one half is conjugated by c = M_other[beta]
    (beta~ = sigma(c) beta / c) and the value scaled to r/c.  The base
    case is the constant r (degree < 1).
    """
    B, r = list(B), list(r)
    if len(B) != len(r):
        raise ValueError("point/value length mismatch")
    if rem_annihilator(ring, B).degree != len(B):
        raise ValueError("interpolation points must be P-independent")
    return _interp_rec(ring, B, r)


def _conjugate(ring, beta, c):
    field = ring.field
    return field.mul(field.mul(ring.sigma(c), beta), field.inv(c))


def _interp_rec(ring, B, r):
    n = len(B)
    if n == 0:
        return ring.zero()
    if n == 1:
        return ring.const(r[0])
    field = ring.field
    h = (n + 1) // 2
    B1, B2 = B[:h], B[h:]
    r1, r2 = r[:h], r[h:]
    M1 = rem_annihilator(ring, B1)
    M2 = rem_annihilator(ring, B2)
    c1 = rem_mpe(M2, B1)
    c2 = rem_mpe(M1, B2)
    Bt1 = [_conjugate(ring, b, c) for b, c in zip(B1, c1)]
    Bt2 = [_conjugate(ring, b, c) for b, c in zip(B2, c2)]
    rt1 = [field.div(v, c) for v, c in zip(r1, c1)]
    rt2 = [field.div(v, c) for v, c in zip(r2, c2)]
    f1 = _interp_rec(ring, Bt1, rt1)
    f2 = _interp_rec(ring, Bt2, rt2)
    return f1 * M2 + f2 * M1


# -- naive oracles -------------------------------------------------------------

def rem_mpe_naive(f: SkewPoly, B) -> list:
    return [rem_eval(f, b) for b in B]


def rem_annihilator_naive(ring: SkewPolyRing, B) -> SkewPoly:
    """Iterated llcm of the linear factors, left to right."""
    B = list(B)
    if not B:
        return ring.one()
    out = linear_factor(ring, B[0])
    for b in B[1:]:
        out = llcm(out, linear_factor(ring, b))
    return out


def rem_interpolate_naive(ring: SkewPolyRing, B, r) -> SkewPoly:
    """Solve the remainder-Vandermonde system: f[b] = sum_j c_j N_j(b)
    with N_0 = 1, N_j = sigma(N_{j-1}) b."""
    from .fields import fqm_linear_solve

    n = len(B)
    field = ring.field
    V = []
    for b in B:
        row, N = [], 1
        for j in range(n):
            if j:
                N = field.mul(ring.sigma(N), b)
            row.append(N)
        V.append(row)
    c = fqm_linear_solve(field, V, list(r))
    return ring.poly(c)
