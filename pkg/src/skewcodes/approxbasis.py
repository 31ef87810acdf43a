"""Left and right shifted approximant bases over the skew ring.

A right approximant of A of order d is a column vector v with
A v = 0 mod_l x^d; a left approximant is a row vector v with
v A = 0 mod_r x^d.  A right (left) s-ordered weak Popov approximant
basis is a square full-rank matrix in the ordered weak Popov form whose
columns (rows) generate all approximants of that order.

Order-1 bases of degree-0 matrices come from rank-profile Gaussian
elimination over F_{q^m}; higher orders are built either recursively
(pm_basis, halving the order) or iteratively one order at a time
(m_basis).  pm_basis falls back to m_basis below a crossover order.

verify_approximant_basis is an independent brute-force oracle: it
checks the normal form, re-multiplies to check the order condition,
and certifies completeness by enumerating the F_q-kernel of the
bounded-degree approximant map and reducing every kernel vector
against the candidate basis by pivot cancellation.
"""

from __future__ import annotations

from .fields import NEG_INF, fq_kernel_basis, rref_with_pivots
from .skewmatrix import (SkewPolyMatrix, is_ordered_weak_popov, pivot_profile,
                         shifted_degrees)
from .skewpoly import SkewPolyRing

PM_CROSSOVER = 8


# ---------------------------------------------------------------------------
# Order-1 base cases
# ---------------------------------------------------------------------------

def _rank_profiles(field, C):
    """Row and column rank profiles of a constant matrix over F_{q^m}."""
    if not C or not C[0]:
        return [], []
    _, col_prof = rref_with_pivots(field, C)
    Ct = [[C[i][j] for i in range(len(C))] for j in range(len(C[0]))]
    _, row_prof = rref_with_pivots(field, Ct)
    return row_prof, col_prof


def right_base_case(A: SkewPolyMatrix, s) -> SkewPolyMatrix:
    """Right s-ordered weak Popov approximant basis of order 1 of a
    degree-0 matrix.

    Columns are permuted stably by (s_j, j), rank profiles of the
    permuted constant matrix select an invertible block A1, and the
    result is the conjugated block matrix [[x I, -A1^{-1} A2], [0, I]].
    """
    ring = A.ring
    field = ring.field
    a, b = A.shape
    if A.deg() >= 1:
        raise ValueError("base case requires a matrix of degree < 1")
    if len(s) != b:
        raise ValueError("shift length mismatch")
    C = A.constant_matrix()
    order = sorted(range(b), key=lambda j: (s[j], j))
    Cp = [[C[i][order[jj]] for jj in range(b)] for i in range(a)]
    row_prof, col_prof = _rank_profiles(field, Cp)
    rho = len(col_prof)
    comp = [j for j in range(b) if j not in col_prof]
    D = []
    if rho and comp:
        A1 = [[Cp[i][j] for j in col_prof] for i in row_prof]
        A2 = [[Cp[i][j] for j in comp] for i in row_prof]
        X = _solve_square(field, A1, A2)
        D = [[field.neg(x) for x in row] for row in X]
    # working order: pivot columns first, then the rest, in sorted coords
    W = [order[j] for j in col_prof] + [order[j] for j in comp]
    zero, one, x = ring.zero(), ring.one(), ring.x()
    B = [[zero] * b for _ in range(b)]
    for u in range(rho):
        B[W[u]][W[u]] = x
        for v in range(b - rho):
            d = D[u][v]
            if d:
                B[W[u]][W[rho + v]] = ring.const(d)
    for v in range(b - rho):
        B[W[rho + v]][W[rho + v]] = one
    return SkewPolyMatrix(ring, B)


def _solve_square(field, A1, B):
    """X with A1 X = B for invertible square A1 (rank-profile block)."""
    n = len(A1)
    w = len(B[0])
    aug = [list(ra) + list(rb) for ra, rb in zip(A1, B)]
    R, piv = rref_with_pivots(field, aug)
    if piv[:n] != list(range(n)):
        raise ValueError("rank-profile block is singular (bug)")
    return [R[i][n:] for i in range(n)]


def left_base_case(A: SkewPolyMatrix, s) -> SkewPolyMatrix:
    """Left mirror of the base case: transpose, run the right case, and
    transpose back (the coefficient maps are identities at degree 0)."""
    a, _ = A.shape
    if len(s) != a:
        raise ValueError("shift length mismatch")
    return right_base_case(A.transpose(), s).transpose()


# ---------------------------------------------------------------------------
# M-Basis: iterative order-by-order construction
# ---------------------------------------------------------------------------

def right_m_basis(d: int, A: SkewPolyMatrix, s) -> SkewPolyMatrix:
    ring = A.ring
    _, b = A.shape
    if d <= 0:
        return SkewPolyMatrix.identity(ring, b)
    t = list(s)
    R = A.truncate(d)  # the order-d approximant module only sees A rem x^d
    B = None
    for step in range(d):
        Bi = right_base_case(R.truncate(1), t)
        rem = d - step - 1
        if rem > 0:
            R = (R * Bi).shift_left_x(1).truncate(rem)
        t = shifted_degrees(Bi, t, "column")
        B = Bi if B is None else B * Bi
    return B


def left_m_basis(d: int, A: SkewPolyMatrix, s) -> SkewPolyMatrix:
    ring = A.ring
    a, _ = A.shape
    if d <= 0:
        return SkewPolyMatrix.identity(ring, a)
    t = list(s)
    R = A.truncate(d)
    B = None
    for step in range(d):
        Bi = left_base_case(R.truncate(1), t)
        rem = d - step - 1
        if rem > 0:
            R = (Bi * R).shift_right_x(1).truncate(rem)
        t = shifted_degrees(Bi, t, "row")
        B = Bi if B is None else Bi * B
    return B


# ---------------------------------------------------------------------------
# PM-Basis: divide & conquer on the order
# ---------------------------------------------------------------------------

def right_pm_basis(d: int, A: SkewPolyMatrix, s,
                   crossover: int = PM_CROSSOVER) -> SkewPolyMatrix:
    """Order-d right basis by splitting d = d1 + d2: compute B1 at order
    d1, form the residual G = (x^(-d1) A B1) rem_l x^(d2) with the
    updated shift t = cdeg_s(B1), and return B1 B2."""
    _, b = A.shape
    if d <= 0:
        return SkewPolyMatrix.identity(A.ring, b)
    if A.deg() >= d:
        A = A.truncate(d)
    if d <= crossover:
        return right_m_basis(d, A, s)
    d1 = (d + 1) // 2
    d2 = d - d1
    B1 = right_pm_basis(d1, A.truncate(d1), s, crossover)
    G = (A * B1).truncate(d1 + d2).shift_left_x(d1).truncate(d2)
    t = shifted_degrees(B1, s, "column")
    B2 = right_pm_basis(d2, G, t, crossover)
    return B1 * B2


def left_pm_basis(d: int, A: SkewPolyMatrix, s,
                  crossover: int = PM_CROSSOVER) -> SkewPolyMatrix:
    """Left mirror: G = (B1 A x^(-d1)) rem_r x^(d2) (no coefficient
    twist on the right-side monomial shift) and the result is B2 B1."""
    a, _ = A.shape
    if d <= 0:
        return SkewPolyMatrix.identity(A.ring, a)
    if A.deg() >= d:
        A = A.truncate(d)
    if d <= crossover:
        return left_m_basis(d, A, s)
    d1 = (d + 1) // 2
    d2 = d - d1
    B1 = left_pm_basis(d1, A.truncate(d1), s, crossover)
    G = (B1 * A).truncate(d1 + d2).shift_right_x(d1).truncate(d2)
    t = shifted_degrees(B1, s, "row")
    B2 = left_pm_basis(d2, G, t, crossover)
    return B2 * B1


def m_basis(d: int, A: SkewPolyMatrix, s, side: str) -> SkewPolyMatrix:
    if side == "right":
        return right_m_basis(d, A, s)
    if side == "left":
        return left_m_basis(d, A, s)
    raise ValueError(f"bad side {side!r}")


def pm_basis(d: int, A: SkewPolyMatrix, s, side: str,
             crossover: int = PM_CROSSOVER) -> SkewPolyMatrix:
    if side == "right":
        return right_pm_basis(d, A, s, crossover)
    if side == "left":
        return left_pm_basis(d, A, s, crossover)
    raise ValueError(f"bad side {side!r}")


def pivot_degrees(B: SkewPolyMatrix):
    """Diagonal degrees of a square ordered weak Popov basis (the module
    invariants compared across algorithms)."""
    n, _ = B.shape
    return [B.rows[i][i].degree for i in range(n)]


# ---------------------------------------------------------------------------
# Independent verifier
# ---------------------------------------------------------------------------

def _reduce_against_right(B: SkewPolyMatrix, s, v):
    """Reduce a column approximant against basis columns by pivot
    cancellation; True iff it reaches zero (membership in the span)."""
    ring = B.ring
    field = ring.field
    sig = ring.sigma
    v = list(v)
    while any(p.c for p in v):
        i, dv = pivot_profile(v, s)
        Bii = B.rows[i][i]
        delta = dv - Bii.degree
        if delta < 0:
            return False
        c = sig(field.mul(field.inv(Bii.lead_coeff), v[i].lead_coeff),
                -Bii.degree)
        mono = ring.monomial(c, delta)
        col = B.col(i)
        v = [p - q * mono for p, q in zip(v, col)]
    return True


def _reduce_against_left(B: SkewPolyMatrix, s, v):
    ring = B.ring
    field = ring.field
    sig = ring.sigma
    v = list(v)
    while any(p.c for p in v):
        i, dv = pivot_profile(v, s)
        Bii = B.rows[i][i]
        delta = dv - Bii.degree
        if delta < 0:
            return False
        c = field.mul(v[i].lead_coeff, field.inv(sig(Bii.lead_coeff, delta)))
        mono = ring.monomial(c, delta)
        row = B.row(i)
        v = [p - mono * q for p, q in zip(v, row)]
    return True


def verify_approximant_basis(A: SkewPolyMatrix, d: int, s, side: str,
                             B: SkewPolyMatrix) -> bool:
    """Brute-force check that B is a genuine order-d shifted approximant
    basis of A on the given side (desk scale only).

    Checks, in order: squareness and absence of zero lines (bases are
    full rank), the ordered weak Popov form, that every line of B is an
    approximant of order d (direct re-multiplication), and completeness:
    every member of an F_q-basis of the bounded-degree approximant
    kernel reduces to zero against B.
    """
    ring = A.ring
    field = ring.field
    a, b = A.shape
    n = b if side == "right" else a
    if B.shape != (n, n):
        return False
    orientation = "column" if side == "right" else "row"
    lines = [B.col(j) for j in range(n)] if side == "right" \
        else [B.row(i) for i in range(n)]
    if any(all(p.is_zero() for p in line) for line in lines):
        return False
    if not is_ordered_weak_popov(B, s, orientation):
        return False
    # with no zero lines, strictly increasing pivots force pivot(line i) = i
    for i, line in enumerate(lines):
        if pivot_profile(line, s)[0] != i:
            return False
    prod = A * B if side == "right" else B * A
    if not prod.truncate(d).is_zero():
        return False
    # completeness: every approximant with shifted degree within the
    # basis' own pivot-degree cap must lie in the span of B
    diag = [B.rows[i][i].degree for i in range(n)]
    dmax = max(di + si for di, si in zip(diag, s))
    caps = [dmax - si for si in s]
    unknowns = []  # (position, degree)
    for i, cap in enumerate(caps):
        for e in range(cap + 1):
            unknowns.append((i, e))
    if not unknowns:
        return True
    m = field.m
    q = field.q
    cols = []
    for (i, e) in unknowns:
        for tcoord in range(m):
            eps = field.from_coords([1 if t == tcoord else 0
                                     for t in range(m)])
            mono = ring.monomial(eps, e)
            if side == "right":
                vec = [A.rows[r][i] * mono for r in range(a)]
            else:
                vec = [mono * A.rows[i][c] for c in range(b)]
            col = []
            for p in vec:
                for k in range(d):
                    col.extend(field.coords(p.coeff(k)))
            cols.append(col)
    nrows = len(cols[0])
    M = [[cols[c][r] for c in range(len(cols))] for r in range(nrows)]
    for kv in fq_kernel_basis(q, M):
        # assemble the approximant from the kernel coordinates
        coeffs = [[0] * (cap + 1) for cap in caps]
        for (pos, (i, e)) in enumerate(unknowns):
            block = kv[pos * m:(pos + 1) * m]
            if any(block):
                coeffs[i][e] = field.add(coeffs[i][e],
                                         field.from_coords(block))
        v = [ring.poly(cs) for cs in coeffs]
        ok = (_reduce_against_right(B, s, v) if side == "right"
              else _reduce_against_left(B, s, v))
        if not ok:
            return False
    return True
