"""Lifted interleaved Gabidulin codes in the subspace metric: the
lifting encoder, the insertion/deletion operator channel, the subspace
distance, and interpolation-based decoding.

A codeword is the F_q-row space of [alpha^T | C^T] inside
F_q^(m(l+1)); transmission applies delta deletions (a random
codimension-delta subspace) and gamma insertions (a random error space
intersecting the input trivially).  Decoding ingests any basis of the
received space, row-reduces it over F_q, and runs the same
interpolation / root-finding pipeline as the rank decoder with the
subspace degree parameter.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .fields import fq_expand, fq_rank
from .interpsolver import normalize_points, vector_interpolate, vector_root_find
from .outcomes import FAILURE, LIST, UNIQUE, DecodeOutcome
from .rankcodes import IGCode, ig_encode, make_ig_code

CHANNEL_RETRIES = 64


@dataclass
class LIGCode:
    inner: IGCode

    @property
    def ring(self):
        return self.inner.ring

    @property
    def field(self):
        return self.inner.field

    @property
    def nt(self) -> int:
        return self.inner.n

    @property
    def ell(self) -> int:
        return self.inner.ell

    @property
    def k(self):
        return self.inner.k


def make_lig_code(ring, nt: int, k, alpha=None) -> LIGCode:
    return LIGCode(inner=make_ig_code(ring, nt, k, alpha))


def lig_encode(code: LIGCode, f) -> list:
    """Basis rows (alpha_j, C_1j, ..., C_lj) of the lifted codeword."""
    C = ig_encode(code.inner, f)
    nt, ell = code.nt, code.ell
    return [[code.inner.alpha[j]] + [C[i][j] for i in range(ell)]
            for j in range(nt)]


def space_rank(field, rows) -> int:
    if not rows:
        return 0
    return fq_rank(field.q, fq_expand(field, rows, "row"))


def subspace_distance(field, Urows, Vrows) -> int:
    """dim U + dim V - 2 dim(U meet V), via dim(U+V) over F_q."""
    du, dv = space_rank(field, Urows), space_rank(field, Vrows)
    dsum = space_rank(field, list(Urows) + list(Vrows))
    return 2 * dsum - du - dv


def operator_channel(field, Vrows, gamma: int, delta: int, rng) -> list:
    """A basis of H + E where H is a random (nt - delta)-dimensional
    subspace of span(V) and E a random gamma-dimensional error space
    with E meet span(V) = 0."""
    nt = len(Vrows)
    width = len(Vrows[0])
    if delta > nt:
        raise ValueError("cannot delete more dimensions than transmitted")
    if nt + gamma > field.m * width:
        raise ValueError("insertions exceed the ambient dimension")
    keep = nt - delta
    for _ in range(CHANNEL_RETRIES):
        M = [[rng.randrange(field.q) for _ in range(nt)] for _ in range(keep)]
        if fq_rank(field.q, M) != keep:
            continue
        H = []
        for row in M:
            acc = [0] * width
            for c, vrow in zip(row, Vrows):
                if c:
                    acc = [field.add(a, field.scal(c, v))
                           for a, v in zip(acc, vrow)]
            H.append(acc)
        E = [[field.rand(rng) for _ in range(width)] for _ in range(gamma)]
        if space_rank(field, list(Vrows) + E) != nt + gamma:
            continue
        out = H + E
        if space_rank(field, out) == keep + gamma:
            return out
    raise RuntimeError("operator channel failed to sample a valid space")


def lig_decode(code: LIGCode, Urows) -> DecodeOutcome:
    """Decode a received basis; rows are F_q-reduced on ingestion so the
    result does not depend on the basis choice."""
    ring = code.ring
    field = code.field
    np_ = normalize_points(field, Urows)
    reduced = []
    for a, rows in np_.blocks:
        for r in rows:
            reduced.append([0] * a + list(r))
    nr = len(reduced)
    ell = code.ell
    D = math.ceil((nr + sum(code.k) - ell + 1) / (ell + 1))
    w = [0] + [ki - 1 for ki in code.k]
    t0 = time.perf_counter()
    qvecs = vector_interpolate(ring, reduced, D, w)
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
