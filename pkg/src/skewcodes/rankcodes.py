"""Interleaved Gabidulin codes in the rank metric: encoding, weight,
an exact-weight error channel, and interpolation-based list decoding.

A codeword is the l x n matrix of operator evaluations of the l message
polynomials at shared F_q-independent points.  The decoder interpolates
Q-vectors through the received word lifted by the evaluation points and
extracts the affine root space; it is guaranteed to contain every
message whose codeword lies within rank distance
l/(l+1) * (n - kbar + 1) of the received word (exclusive).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .fields import fq_expand, fq_rank
from .interpsolver import vector_interpolate, vector_root_find
from .opeval import op_mpe
from .outcomes import FAILURE, LIST, UNIQUE, DecodeOutcome
from .skewpoly import SkewPolyRing

CHANNEL_RETRIES = 64


@dataclass
class IGCode:
    ring: SkewPolyRing
    n: int
    k: tuple                       # per-row dimensions, length l
    alpha: tuple                   # n evaluation points, F_q-independent

    @property
    def ell(self) -> int:
        return len(self.k)

    @property
    def field(self):
        return self.ring.field


def make_ig_code(ring: SkewPolyRing, n: int, k, alpha=None) -> IGCode:
    field = ring.field
    if n > field.m:
        raise ValueError("rank-metric codes need n <= m")
    if alpha is None:
        z = field.gen()
        alpha = []
        cur = 1
        for _ in range(n):
            alpha.append(cur)
            cur = field.mul(cur, z)
    alpha = tuple(alpha)
    if fq_rank(field.q, fq_expand(field, [[a] for a in alpha], "row")) != n:
        raise ValueError("evaluation points must be F_q-independent")
    k = tuple(k)
    if any(ki < 1 or ki > n for ki in k):
        raise ValueError("dimensions must satisfy 1 <= k_i <= n")
    return IGCode(ring=ring, n=n, k=k, alpha=alpha)


def random_message(code: IGCode, rng) -> list:
    return [code.ring.poly([code.field.rand(rng) for _ in range(ki)])
            for ki in code.k]


def ig_encode(code: IGCode, f) -> list:
    """Rows of evaluations: row i = [f_i(alpha_1), ..., f_i(alpha_n)]."""
    if len(f) != code.ell:
        raise ValueError("message has wrong interleaving order")
    for fi, ki in zip(f, code.k):
        if fi.c and fi.degree >= ki:
            raise ValueError("message degree exceeds the code dimension")
    return [op_mpe(fi, code.alpha) for fi in f]


def rank_weight(field, M) -> int:
    """F_q-rank of the column-expanded matrix."""
    if not M:
        return 0
    return fq_rank(field.q, fq_expand(field, M, "column"))


def rank_distance(field, A, B) -> int:
    return rank_weight(field, [[field.sub(x, y) for x, y in zip(ra, rb)]
                               for ra, rb in zip(A, B)])


def random_rank_error(field, ell, n, t, rng):
    """An l x n matrix of rank weight exactly t, built as A*B with A an
    l x t matrix whose expansion has full column rank and B a full-rank
    t x n matrix over F_q."""
    if t == 0:
        return [[0] * n for _ in range(ell)]
    if t > min(ell * field.m, n):
        raise ValueError(f"rank weight {t} infeasible for {ell}x{n} over m={field.m}")
    for _ in range(CHANNEL_RETRIES):
        A = [[field.rand(rng) for _ in range(t)] for _ in range(ell)]
        if fq_rank(field.q, fq_expand(field, A, "column")) != t:
            continue
        B = [[rng.randrange(field.q) for _ in range(n)] for _ in range(t)]
        if fq_rank(field.q, B) != t:
            continue
        E = [[0] * n for _ in range(ell)]
        for i in range(ell):
            for j in range(n):
                acc = 0
                for s in range(t):
                    acc = field.add(acc, field.scal(B[s][j], A[i][s]))
                E[i][j] = acc
        if rank_weight(field, E) == t:
            return E
    raise RuntimeError("channel failed to sample an exact-weight error")


def rank_error_channel(code: IGCode, C, t: int, rng) -> list:
    E = random_rank_error(code.field, code.ell, code.n, t, rng)
    return [[code.field.add(c, e) for c, e in zip(rc, re)]
            for rc, re in zip(C, E)]


def decoding_radius(code: IGCode) -> int:
    """Largest t with t < l/(l+1) * (n - kbar + 1)."""
    ell, n = code.ell, code.n
    bound = ell * (n - sum(code.k) / ell + 1) / (ell + 1)
    t = int(math.floor(bound))
    if t == bound:
        t -= 1
    return t


def ig_decode(code: IGCode, R) -> DecodeOutcome:
    """Interpolation-based list decoding of a received l x n matrix."""
    ell, n = code.ell, code.n
    ring = code.ring
    D = n - math.ceil((ell * (n + 1) - sum(code.k)) / (ell + 1)) + 1
    w = [0] + [ki - 1 for ki in code.k]
    U = [[code.alpha[j]] + [R[i][j] for i in range(ell)] for j in range(n)]
    t0 = time.perf_counter()
    qvecs = vector_interpolate(ring, U, D, w)
    t1 = time.perf_counter()
    if not qvecs:
        return DecodeOutcome(status=FAILURE,
                             timings={"interp": t1 - t0, "root": 0.0})
    space = vector_root_find(ring, qvecs, list(code.k))
    t2 = time.perf_counter()
    timings = {"interp": t1 - t0, "root": t2 - t1}
    if space is None:
        return DecodeOutcome(status=FAILURE, interp_count=len(qvecs),
                             timings=timings)
    status = UNIQUE if space.delta == 0 else LIST
    msg = list(space.base) if space.delta == 0 else None
    return DecodeOutcome(status=status, message=msg, space=space,
                         interp_count=len(qvecs), timings=timings)
