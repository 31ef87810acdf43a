"""Skew Reed-Solomon codes in the skew metric and linearized
Reed-Solomon codes in the sum-rank metric, linked by the entrywise
multiplier isometry, with the 2D remainder interpolation decoder.

Codewords of the skew code are remainder evaluations of a message
polynomial of degree < k at a P-independent point set B; the skew
weight of a word y is the degree of the llcm of the linear factors
(x - sigma(y_i) beta_i / y_i) over the nonzero positions.  Multiplying
position-wise by a suitable vector v carries the code isometrically
onto a linearized Reed-Solomon code whose distance is the sum of
per-block rank weights.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .approxbasis import left_pm_basis
from .fields import fq_expand, fq_rank, get_field
from .remeval import (linear_factor, p_independent, rem_annihilator,
                      rem_eval, rem_interpolate, rem_mpe)
from .skewmatrix import SkewPolyMatrix, shifted_degrees
from .skewpoly import SkewPolyRing, llcm, skew_ring

CHANNEL_RETRIES = 64


@dataclass
class SkewRSCode:
    ring: SkewPolyRing
    B: tuple                       # P-independent evaluation points
    k: int

    @property
    def n(self) -> int:
        return len(self.B)

    @property
    def field(self):
        return self.ring.field


def make_skew_rs_code(ring: SkewPolyRing, B, k: int) -> SkewRSCode:
    B = tuple(B)
    if not 0 < k < len(B):
        raise ValueError("need 0 < k < n")
    if not p_independent(ring, B):
        raise ValueError("evaluation points must be P-independent")
    return SkewRSCode(ring=ring, B=B, k=k)


def skew_rs_encode(code: SkewRSCode, f) -> list:
    if f.c and f.degree >= code.k:
        raise ValueError("message degree exceeds the code dimension")
    return rem_mpe(f, code.B)


def skew_weight(ring: SkewPolyRing, y, B) -> int:
    """deg llcm over nonzero positions of (x - sigma(y_i) beta_i / y_i);
    0 for the zero word."""
    field = ring.field
    factors = []
    for yi, bi in zip(y, B):
        if yi:
            conj = field.mul(field.mul(ring.sigma(yi), bi), field.inv(yi))
            factors.append(linear_factor(ring, conj))
    if not factors:
        return 0
    acc = factors[0]
    for fct in factors[1:]:
        acc = llcm(acc, fct)
    return acc.degree


def skew_distance(ring, y1, y2, B) -> int:
    field = ring.field
    return skew_weight(ring, [field.sub(a, b) for a, b in zip(y1, y2)], B)


def sum_rank_weight(field, c, blocks) -> int:
    if sum(blocks) != len(c):
        raise ValueError("block lengths do not partition the word")
    total, pos = 0, 0
    for ni in blocks:
        seg = c[pos:pos + ni]
        pos += ni
        total += fq_rank(field.q, fq_expand(field, [seg], "column"))
    return total


@dataclass
class LinRSCode:
    skew: SkewRSCode
    v: tuple                       # nonzero position multipliers
    blocks: tuple

    @property
    def ring(self):
        return self.skew.ring

    @property
    def field(self):
        return self.skew.field

    @property
    def n(self) -> int:
        return self.skew.n

    @property
    def k(self) -> int:
        return self.skew.k


def build_linearized_rs(q: int, m: int, ell: int, blocks, k: int,
                        frob_power: int = 1) -> LinRSCode:
    """Construct (B, v) from conjugacy-class representatives gamma^(i-1)
    and a power-basis prefix b_1..b_{n_i} per block:
    beta = sigma(b_j)/b_j * gamma^(i-1), v = b_j blockwise.

    The construction is validated by the P-independence degree check
    and rejected with an error if it fails (which would signal the
    construction is wrong for these parameters).
    """
    blocks = tuple(blocks)
    if len(blocks) != ell:
        raise ValueError("number of blocks must equal ell")
    if ell >= q:
        raise ValueError("need ell < q distinct conjugacy classes")
    if any(ni > m for ni in blocks):
        raise ValueError("each block length must be at most m")
    ring = skew_ring(q, m, frob_power)
    field = ring.field
    gamma = field.primitive_element()
    z = field.gen()
    B, v = [], []
    rep = 1
    for i, ni in enumerate(blocks):
        if i:
            rep = field.mul(rep, gamma)
        bj = 1
        for j in range(ni):
            conj = field.mul(field.mul(ring.sigma(bj), field.inv(bj)), rep)
            B.append(conj)
            v.append(bj)
            bj = field.mul(bj, z)
    n = sum(blocks)
    if rem_annihilator(ring, B).degree != n:
        raise ValueError("construction failed the P-independence check")
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    return LinRSCode(skew=SkewRSCode(ring=ring, B=tuple(B), k=k),
                     v=tuple(v), blocks=blocks)


def isometry_map(code: LinRSCode, y, direction: str = "forward") -> list:
    field = code.field
    if direction == "forward":
        return [field.mul(a, vi) for a, vi in zip(y, code.v)]
    if direction == "inverse":
        return [field.div(a, vi) for a, vi in zip(y, code.v)]
    raise ValueError(f"bad direction {direction!r}")


def lin_rs_encode(code: LinRSCode, f) -> list:
    return isometry_map(code, skew_rs_encode(code.skew, f), "forward")


# ---------------------------------------------------------------------------
# 2D vector remainder interpolation and decoding
# ---------------------------------------------------------------------------

def bivariate_rem_interpolate(ring: SkewPolyRing, B, r, D: int, w):
    """A nonzero (Q0, Q1) with Q0[b_i] + (Q1 R)[b_i] = 0 for all i and
    rdeg_w < D, or None if no such pair exists.

    Reduces to a left approximant basis of [1, R, G]^T where R
    interpolates the received word and G annihilates B; any basis row
    of shifted degree below D solves the problem.
    """
    B = list(B)
    n = len(B)
    if D <= min(w):
        return None
    G = rem_annihilator(ring, B)
    if G.degree != n:
        raise ValueError("evaluation points must be P-independent")
    R = rem_interpolate(ring, B, list(r))
    s = [w[0], w[1], min(w)]
    d = D + n - min(w)
    A = SkewPolyMatrix(ring, [[ring.one()], [R], [G]])
    Bas = left_pm_basis(d, A, s)
    rdegs = shifted_degrees(Bas, s, "row")
    best, best_rd = None, None
    for i, rd in enumerate(rdegs):
        if rd < D and (best_rd is None or rd < best_rd):
            best, best_rd = i, rd
    if best is None:
        return None
    row = Bas.row(best)
    return row[0], row[1]


def skew_rs_decode(code: SkewRSCode, r):
    """Unique decoding up to floor((n-k)/2) skew-weight errors: solve
    the 2D interpolation, then read the message off Q1 f = -Q0 by exact
    left division.  Returns (f, timings) with f None on failure."""
    n, k = code.n, code.k
    D = k + math.ceil((n - k) / 2)
    w = [0, k - 1]
    t0 = time.perf_counter()
    sol = bivariate_rem_interpolate(code.ring, code.B, r, D, w)
    t1 = time.perf_counter()
    timings = {"interp": t1 - t0, "root": 0.0}
    if sol is None:
        return None, timings
    Q0, Q1 = sol
    if Q1.is_zero():
        return None, timings
    f, rem = (-Q0).left_divmod(Q1)
    t2 = time.perf_counter()
    timings["root"] = t2 - t1
    if not rem.is_zero():
        return None, timings
    if f.c and f.degree >= k:
        return None, timings
    return f, timings


def lin_rs_decode(code: LinRSCode, r):
    y = isometry_map(code, r, "inverse")
    return skew_rs_decode(code.skew, y)


def random_sum_rank_error(field, blocks, t: int, rng) -> list:
    """A vector of sum-rank weight exactly t: a random composition of t
    over the blocks, each block an outer product of F_q-independent
    field elements with a full-rank F_q matrix."""
    caps = [min(ni, field.m) for ni in blocks]
    if t > sum(caps):
        raise ValueError(f"sum-rank weight {t} infeasible for blocks {blocks}")
    for _ in range(CHANNEL_RETRIES):
        parts = [0] * len(blocks)
        left = t
        while left:
            i = rng.randrange(len(blocks))
            if parts[i] < caps[i]:
                parts[i] += 1
                left -= 1
        e = []
        ok = True
        for ni, ti in zip(blocks, parts):
            if ti == 0:
                e.extend([0] * ni)
                continue
            for _ in range(CHANNEL_RETRIES):
                a = [field.rand(rng) for _ in range(ti)]
                if fq_rank(field.q, fq_expand(field, [a], "column")) != ti:
                    continue
                Bm = [[rng.randrange(field.q) for _ in range(ni)]
                      for _ in range(ti)]
                if fq_rank(field.q, Bm) != ti:
                    continue
                seg = []
                for j in range(ni):
                    acc = 0
                    for s_ in range(ti):
                        acc = field.add(acc, field.scal(Bm[s_][j], a[s_]))
                    seg.append(acc)
                e.extend(seg)
                break
            else:
                ok = False
                break
        if ok and sum_rank_weight(field, e, blocks) == t:
            return e
    raise RuntimeError("channel failed to sample an exact-weight error")


def sum_rank_channel(field, c, blocks, t: int, rng) -> list:
    e = random_sum_rank_error(field, blocks, t, rng)
    return [field.add(a, b) for a, b in zip(c, e)]


# -- definitional skew weight (exhaustive oracle, desk scale) -----------------

def skew_weight_definitional(ring: SkewPolyRing, y, B) -> int:
    """n - Prk(Z(interpolant) intersect closure(B)) by enumerating the
    whole field; exponential, for cross-checks only."""
    field = ring.field
    n = len(B)
    if not any(y):
        return 0
    R = rem_interpolate(ring, list(B), list(y))
    MB = rem_annihilator(ring, list(B))
    closure = [a for a in field.elements() if rem_eval(MB, a) == 0]
    zero_set = [a for a in closure if rem_eval(R, a) == 0]
    return n - rem_annihilator(ring, zero_set).degree
