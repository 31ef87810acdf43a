"""Vector operator interpolation and vector root finding via approximant
bases, plus the lower-triangular interpolation-module basis used as a
cross-check.

The interpolation problem: given interpolation points (rows of U) and a
degree profile, find left-independent vectors Q = [Q_0..Q_l] spanning
all vectors with sum_j Q_{j-1}(U_{i,j}) = 0 and rdeg_w(Q) < D.  Points
are first normalized by F_q row operations into a staircase of blocks
whose first columns are F_q-independent; each block contributes one
column (interpolation polynomials over an annihilator) to a matrix
whose bounded-degree left kernel is computed as a left approximant
basis.

The root-finding problem: given such Q-vectors and degree bounds k,
describe the affine space of [f_1..f_l] with
Q_0 + sum_j Q_j f_j = 0 and deg f_j < k_j; solved by a right
approximant basis of the stacked Q matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .approxbasis import left_pm_basis, right_pm_basis
from .fields import ExtField, fq_rank, fq_solve, get_field, rref_with_pivots
from .opeval import op_annihilator, op_eval, op_interpolate
from .skewmatrix import SkewPolyMatrix, shifted_degrees
from .skewpoly import SkewPoly, SkewPolyRing


# ---------------------------------------------------------------------------
# Point normalization (F_q row reduction of the point matrix)
# ---------------------------------------------------------------------------

@dataclass
class NormalizedPoints:
    """Staircase form of a point matrix: blocks (offset, rows) with
    strictly increasing offsets, each block's rows of width l+1-offset
    having an F_q-independent first column.  transform records the F_q
    row operations, so transform * U reproduces the folded rows."""

    width: int                      # l + 1
    blocks: list                    # [(offset, [row tuples])]
    transform: list                 # n x n over F_q

    @property
    def total_rows(self):
        return sum(len(rows) for _, rows in self.blocks)


def normalize_points(fieldobj: ExtField, U) -> NormalizedPoints:
    U = [list(r) for r in U]
    n = len(U)
    if n == 0:
        return NormalizedPoints(width=0, blocks=[], transform=[])
    w = len(U[0])
    m, q = fieldobj.m, fieldobj.q
    exp = [[d for a in row for d in fieldobj.coords(a)] + ident
           for row, ident in zip(U, ([1 if i == j else 0 for j in range(n)]
                                     for i in range(n)))]
    fq = get_field(q, 1)
    R, piv = rref_with_pivots(fq, exp)
    main_piv = [p for p in piv if p < w * m]
    if len(main_piv) != n:
        raise ValueError("interpolation points are F_q-dependent")
    transform = [row[w * m:] for row in R]
    folded = [[fieldobj.from_coords(row[c * m:(c + 1) * m]) for c in range(w)]
              for row in R]
    blocks = []
    for r, p in enumerate(main_piv):
        a = p // m
        row = tuple(folded[r][a:])
        if blocks and blocks[-1][0] == a:
            blocks[-1][1].append(row)
        else:
            blocks.append((a, [row]))
    return NormalizedPoints(width=w, blocks=blocks, transform=transform)


def build_interp_matrix(ring: SkewPolyRing, np_: NormalizedPoints) -> SkewPolyMatrix:
    """The (l+1+rho) x rho matrix whose bounded-degree left kernel
    (restricted to the first l+1 coordinates) is the solution module of
    the interpolation condition.  Column i carries a 1 at the block
    offset, interpolation polynomials below it, and the block's
    annihilator in the lower chi-part."""
    w = np_.width
    rho = len(np_.blocks)
    rows = [[ring.zero() for _ in range(rho)] for _ in range(w + rho)]
    for ci, (a, brows) in enumerate(np_.blocks):
        first = [r[0] for r in brows]
        rows[a][ci] = ring.one()
        for j in range(1, w - a):
            pts = [(r[0], r[j]) for r in brows]
            rows[a + j][ci] = op_interpolate(ring, pts)
        rows[w + ci][ci] = op_annihilator(ring, first)
    return SkewPolyMatrix(ring, rows)


def vector_interpolate(ring: SkewPolyRing, U, D: int, w) -> list:
    """Solve the vector interpolation problem; returns a list of
    Q-vectors (each of length l+1 = len(w)), possibly empty."""
    fieldobj = ring.field
    n = len(U)
    wmin = min(w)
    if D <= wmin or n == 0:
        return []
    first = [[row[0]] for row in U]
    from .fields import fq_expand

    if fq_rank(fieldobj.q, fq_expand(fieldobj, first, "row")) == n:
        np_ = NormalizedPoints(width=len(w),
                               blocks=[(0, [tuple(r) for r in U])],
                               transform=[])
    else:
        np_ = normalize_points(fieldobj, U)
    A = build_interp_matrix(ring, np_)
    rho = len(np_.blocks)
    s = list(w) + [wmin] * rho
    d = D - wmin + n
    B = left_pm_basis(d, A, s)
    ell1 = len(w)
    out = []
    rdegs = shifted_degrees(B, s, "row")
    for i, rd in enumerate(rdegs):
        if rd < D:
            Q = B.row(i)[:ell1]
            if any(p.c for p in Q):
                out.append(Q)
    return out


def interpolation_condition_holds(ring: SkewPolyRing, Q, U) -> bool:
    """Direct substitution check of the evaluation condition."""
    fieldobj = ring.field
    for row in U:
        acc = 0
        for p, u in zip(Q, row):
            acc = fieldobj.add(acc, op_eval(p, u))
        if acc:
            return False
    return True


# ---------------------------------------------------------------------------
# Root finding
# ---------------------------------------------------------------------------

@dataclass
class AffineRootSpace:
    """g_star + right-F_{q^m} span of the direction vectors; every
    element satisfies the root equations within the degree bounds."""

    ring: SkewPolyRing
    base: list                      # l skew polynomials
    directions: list                # delta vectors of l skew polynomials

    @property
    def delta(self) -> int:
        return len(self.directions)

    def element(self, coeffs) -> list:
        out = list(self.base)
        for vec, c in zip(self.directions, coeffs):
            if c:
                out = [p + gp.rmul_scalar(c) for p, gp in zip(out, vec)]
        return out

    def contains(self, f_vec) -> bool:
        fieldobj = self.ring.field
        m = fieldobj.m
        diff = [a - b for a, b in zip(f_vec, self.base)]
        if not self.directions:
            return all(p.is_zero() for p in diff)
        ell = len(self.base)
        lens = []
        for comp in range(ell):
            ln = len(diff[comp].c)
            for vec in self.directions:
                ln = max(ln, len(vec[comp].c))
            lens.append(ln)
        rows_per_comp = [ln * m for ln in lens]
        total = sum(rows_per_comp)
        cols = []
        for vec in self.directions:
            for t in range(m):
                eps = fieldobj.from_coords([1 if i == t else 0
                                            for i in range(m)])
                col = []
                for comp in range(ell):
                    scaled = vec[comp].rmul_scalar(eps)
                    for e in range(lens[comp]):
                        col.extend(fieldobj.coords(scaled.coeff(e)))
                cols.append(col)
        M = [[cols[c][r] for c in range(len(cols))] for r in range(total)]
        rhs = []
        for comp in range(ell):
            for e in range(lens[comp]):
                rhs.extend(fieldobj.coords(diff[comp].coeff(e)))
        return fq_solve(fieldobj.q, M, rhs) is not None


def vector_root_find(ring: SkewPolyRing, qvecs, k):
    """Affine description of all [f_1..f_l] solving the root equations
    with deg f_j < k_j, or None when the space is empty.

    A right approximant basis of the stacked Q matrix with shift
    [khat, khat-k_1+1, ...] isolates the columns of shifted degree at
    most khat; those with nonzero top entry give the base point and the
    scalar directions, the rest contribute monomial-padded directions.
    """
    ell = len(k)
    for Q in qvecs:
        if len(Q) != ell + 1:
            raise ValueError("Q vector has wrong length")
        if all(p.is_zero() for p in Q):
            raise ValueError("zero Q vector")
    fieldobj = ring.field
    khat = max(k)
    s = [khat] + [khat - kj + 1 for kj in k]
    dmax = 0
    for Q in qvecs:
        for p in Q:
            if p.c:
                dmax = max(dmax, p.degree)
    d = dmax + khat
    A = SkewPolyMatrix(ring, [list(Q) for Q in qvecs])
    B = right_pm_basis(d, A, s)
    t = shifted_degrees(B, s, "column")
    J = [j for j in range(ell + 1) if t[j] <= khat]
    I = [j for j in J if not B.rows[0][j].is_zero()]
    if not I:
        return None
    istar = I[0]
    c_star = B.rows[0][istar]
    if c_star.degree != 0:
        raise AssertionError("pivot-degree bound violated (bug)")
    v = fieldobj.inv(c_star.coeff(0))
    base = [B.rows[r][istar].rmul_scalar(v) for r in range(1, ell + 1)]
    dirs = []
    for j in I[1:]:
        c = fieldobj.mul(B.rows[0][j].coeff(0), v)
        dirs.append([B.rows[r][j] - B.rows[r][istar].rmul_scalar(c)
                     for r in range(1, ell + 1)])
    for j in J:
        if j in I:
            continue
        for e in range(khat - t[j] + 1):
            dirs.append([B.rows[r][j].times_x_right(e)
                         for r in range(1, ell + 1)])
    return AffineRootSpace(ring=ring, base=base, directions=dirs)


def root_condition_holds(ring: SkewPolyRing, qvecs, f_vec) -> bool:
    for Q in qvecs:
        acc = Q[0]
        for p, f in zip(Q[1:], f_vec):
            acc = acc + p * f
        if not acc.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# Interpolation-module basis (lower-triangular cross-check construction)
# ---------------------------------------------------------------------------

def module_basis(ring: SkewPolyRing, ell: int, U) -> SkewPolyMatrix:
    """Lower-triangular basis of the left module of vectors vanishing on
    all interpolation points, built block by block from annihilators
    and correcting interpolation polynomials."""
    fieldobj = ring.field
    if not U:
        return SkewPolyMatrix.identity(ring, ell + 1)
    np_ = normalize_points(fieldobj, U)
    offsets = dict(np_.blocks)
    a_max = max(offsets)
    M = SkewPolyMatrix.identity(ring, ell - a_max)
    for o in range(a_max, -1, -1):
        L = M
        size = L.shape[0]
        if o not in offsets:
            rows = [[ring.one()] + [ring.zero()] * size]
            for i in range(size):
                rows.append([ring.zero()] + L.row(i))
            M = SkewPolyMatrix(ring, rows)
            continue
        brows = offsets[o]
        first = [r[0] for r in brows]
        G = op_annihilator(ring, first)
        rvec = []
        for j in range(size):
            Lj = L.row(j)
            pts = []
            for r in brows:
                val = 0
                for tcol, p in enumerate(Lj):
                    val = fieldobj.add(val, op_eval(p, r[1 + tcol]))
                pts.append((r[0], fieldobj.neg(val)))
            rvec.append(op_interpolate(ring, pts))
        rows = [[G] + [ring.zero()] * size]
        for i in range(size):
            rows.append([rvec[i]] + L.row(i))
        M = SkewPolyMatrix(ring, rows)
    return M
