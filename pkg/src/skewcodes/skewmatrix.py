"""Matrices over the skew polynomial ring: shifted degrees, pivots,
ordered weak Popov predicates, leading matrices, and block arithmetic.

A shift is a plain list of ints weighting rows (row orientation) or
columns (column orientation) in degree comparisons.  The pivot index of
a nonzero vector is the LARGEST index attaining the shifted degree.

Matrix fixture text format: a header line "a b", then a*b polynomial
text lines in row-major order (see skewpoly for the polynomial format).
"""

from __future__ import annotations

from .fields import NEG_INF
from .skewpoly import SkewPoly, SkewPolyRing


class SkewPolyMatrix:
    __slots__ = ("ring", "rows")

    def __init__(self, ring: SkewPolyRing, rows):
        self.ring = ring
        self.rows = [list(r) for r in rows]
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, ring, rows):
        return cls(ring, rows)

    @classmethod
    def zeros(cls, ring, a, b):
        z = ring.zero()
        return cls(ring, [[z] * b for _ in range(a)])

    @classmethod
    def identity(cls, ring, n):
        z, one = ring.zero(), ring.one()
        return cls(ring, [[one if i == j else z for j in range(n)]
                          for i in range(n)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, SkewPolyMatrix)
                and self.ring == other.ring and self.rows == other.rows)

    def __repr__(self):
        a, b = self.shape
        return f"SkewPolyMatrix({a}x{b} over {self.ring!r})"

    def row(self, i):
        return list(self.rows[i])

    def col(self, j):
        return [r[j] for r in self.rows]

    def transpose(self) -> "SkewPolyMatrix":
        a, b = self.shape
        return SkewPolyMatrix(self.ring,
                              [[self.rows[i][j] for i in range(a)]
                               for j in range(b)])

    def deg(self):
        d = NEG_INF
        for r in self.rows:
            for p in r:
                if p.degree > d:
                    d = p.degree
        return d

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.rows for p in r)

    def constant_matrix(self):
        """The coefficient-0 part as an int grid (valid for any degree)."""
        return [[p.coeff(0) for p in r] for r in self.rows]

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        a, b = self.shape
        if other.shape != (a, b):
            raise ValueError("shape mismatch")
        return SkewPolyMatrix(self.ring,
                              [[x + y for x, y in zip(r1, r2)]
                               for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        a, b = self.shape
        if other.shape != (a, b):
            raise ValueError("shape mismatch")
        return SkewPolyMatrix(self.ring,
                              [[x - y for x, y in zip(r1, r2)]
                               for r1, r2 in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if not isinstance(other, SkewPolyMatrix):
            return NotImplemented
        a, k = self.shape
        k2, b = other.shape
        if k != k2:
            raise ValueError(f"dimension mismatch {self.shape} x {other.shape}")
        zero = self.ring.zero()
        ocols = [other.col(j) for j in range(b)]
        out = []
        for i in range(a):
            ri = self.rows[i]
            orow = []
            for j in range(b):
                cj = ocols[j]
                acc = zero
                for t in range(k):
                    p, qq = ri[t], cj[t]
                    if p.c and qq.c:
                        acc = acc + p * qq
                orow.append(acc)
            out.append(orow)
        return SkewPolyMatrix(self.ring, out)

    def mat_vec(self, v):
        """Matrix times column vector (list of SkewPoly)."""
        zero = self.ring.zero()
        out = []
        for r in self.rows:
            acc = zero
            for p, q in zip(r, v):
                if p.c and q.c:
                    acc = acc + p * q
            out.append(acc)
        return out

    def vec_mat(self, v):
        """Row vector (list of SkewPoly) times matrix."""
        zero = self.ring.zero()
        a, b = self.shape
        out = []
        for j in range(b):
            acc = zero
            for i in range(a):
                p, q = v[i], self.rows[i][j]
                if p.c and q.c:
                    acc = acc + p * q
            out.append(acc)
        return out

    def truncate(self, d: int, side: str = "left") -> "SkewPolyMatrix":
        return SkewPolyMatrix(self.ring,
                              [[p.truncate(d, side) for p in r]
                               for r in self.rows])

    def shift_left_x(self, d: int) -> "SkewPolyMatrix":
        """x^(-d) * M entrywise (coefficients twisted by sigma^(-d))."""
        return SkewPolyMatrix(self.ring,
                              [[p.div_x_left(d) for p in r] for r in self.rows])

    def shift_right_x(self, d: int) -> "SkewPolyMatrix":
        """M * x^(-d) entrywise (no twist)."""
        return SkewPolyMatrix(self.ring,
                              [[p.div_x_right(d) for p in r] for r in self.rows])

    # -- text fixtures ----------------------------------------------------------

    def to_text(self) -> str:
        a, b = self.shape
        lines = [f"{a} {b}"]
        for r in self.rows:
            lines.extend(p.to_text() for p in r)
        return "\n".join(lines)

    @classmethod
    def from_text(cls, ring, text: str) -> "SkewPolyMatrix":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        a, b = (int(t) for t in lines[0].split())
        if len(lines) != 1 + a * b:
            raise ValueError("matrix text has wrong number of entries")
        it = iter(lines[1:])
        return cls(ring, [[ring.from_text(next(it)) for _ in range(b)]
                          for _ in range(a)])


def mat_mul(A: SkewPolyMatrix, B: SkewPolyMatrix) -> SkewPolyMatrix:
    return A * B


def mat_truncate(M: SkewPolyMatrix, d: int, side: str = "left") -> SkewPolyMatrix:
    return M.truncate(d, side)


def mat_shift_left(M: SkewPolyMatrix, d: int) -> SkewPolyMatrix:
    return M.shift_left_x(d)


def shifted_degrees(M: SkewPolyMatrix, shift, orientation: str):
    """Per-row or per-column max of deg + shift; -inf for zero lines.

    Column orientation: shift has one entry per ROW and the result one
    entry per column (the s-shifted column degree); row orientation is
    the transposed convention.
    """
    a, b = M.shape
    if orientation == "column":
        if len(shift) != a:
            raise ValueError("shift length must equal row count")
        out = []
        for j in range(b):
            d = NEG_INF
            for i in range(a):
                p = M.rows[i][j]
                if p.c:
                    v = p.degree + shift[i]
                    if v > d:
                        d = v
            out.append(d)
        return out
    if orientation == "row":
        if len(shift) != b:
            raise ValueError("shift length must equal column count")
        out = []
        for i in range(a):
            d = NEG_INF
            for j in range(b):
                p = M.rows[i][j]
                if p.c:
                    v = p.degree + shift[j]
                    if v > d:
                        d = v
            out.append(d)
        return out
    raise ValueError(f"bad orientation {orientation!r}")


def cdeg(M: SkewPolyMatrix, shift=None):
    a, _ = M.shape
    return shifted_degrees(M, shift if shift is not None else [0] * a, "column")


def rdeg(M: SkewPolyMatrix, shift=None):
    _, b = M.shape
    return shifted_degrees(M, shift if shift is not None else [0] * b, "row")


def pivot_profile(v, shift):
    """(pivot index, entry degree) of a nonzero vector of skew polynomials.

    The pivot index is the largest i with deg v_i + shift_i equal to the
    shifted degree of v; the returned degree is the unshifted deg v_i.
    """
    best, idx = NEG_INF, None
    for i, p in enumerate(v):
        if p.c:
            d = p.degree + shift[i]
            if d >= best:
                best, idx = d, i
    if idx is None:
        raise ValueError("zero vector has no pivot")
    return idx, v[idx].degree


def is_ordered_weak_popov(M: SkewPolyMatrix, shift, orientation: str) -> bool:
    """True iff pivot indices of the nonzero columns (rows) strictly increase."""
    a, b = M.shape
    vecs = ([M.col(j) for j in range(b)] if orientation == "column"
            else [M.row(i) for i in range(a)])
    last = -1
    for v in vecs:
        if all(p.is_zero() for p in v):
            continue
        idx, _ = pivot_profile(v, shift)
        if idx <= last:
            return False
        last = idx
    return True


def leading_matrix(M: SkewPolyMatrix, shift, orientation: str):
    """The shifted leading coefficient matrix over F_{q^m}.

    Column case: entry (i, j) is the x^(t_j - s_i) coefficient of M_ij
    with t the shifted column degree; row case (i, j) takes the
    x^(t_i - s_j) coefficient with t the shifted row degree.
    """
    a, b = M.shape
    t = shifted_degrees(M, shift, orientation)
    out = [[0] * b for _ in range(a)]
    for i in range(a):
        for j in range(b):
            tv = t[j] if orientation == "column" else t[i]
            if tv == NEG_INF:
                continue
            sv = shift[i] if orientation == "column" else shift[j]
            e = tv - sv
            p = M.rows[i][j]
            if p.c and 0 <= e < len(p.c):
                out[i][j] = p.c[e]
    return out
