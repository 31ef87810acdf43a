"""Worked F_4 fixtures: a 2x2 order-3 instance with known left and
right bases, the left/right transpose mismatch, and an order-2 instance
on which the coefficient-map reduction to ordinary polynomials fails.

The source material states the field as F_2[b]/(b^2+1), which is
reducible; everything here is reproduced over the canonical modulus
b^2+b+1, where all stated matrices check out coefficient for
coefficient (see the fixture checks).
"""

from __future__ import annotations

from .approxbasis import (left_pm_basis, pivot_degrees, right_pm_basis,
                          verify_approximant_basis)
from .skewmatrix import SkewPolyMatrix
from .skewpoly import skew_ring

EXAMPLE1_A = """\
2 2
11*x^3 + 01*x^1
10*x^3 + 01*x^2 + 11*x^1
11*x^3 + 01*x^2 + 10*x^1 + 01
10*x^3 + 10*x^2 + 10
"""

EXAMPLE1_B_LEFT = """\
2 2
10*x^2
0
01*x^1 + 01
10*x^1
"""

EXAMPLE1_B_RIGHT = """\
2 2
10*x^2 + 11*x^1
10
10*x^1
10*x^1 + 01
"""

EXAMPLE2_A = """\
2 2
11*x^2 + 11
01*x^2 + 01*x^1 + 11
10*x^1 + 01
10*x^2 + 01*x^1 + 01
"""

# order-2 basis of the coefficient-mapped matrix over the ORDINARY
# polynomial ring F_4[x]; its skew image is not an approximant basis
EXAMPLE2_B_COMMUTATIVE = """\
2 2
10*x^1 + 10
10*x^1
10
10*x^1
"""

FIXTURE_ORDER_1 = 3
FIXTURE_ORDER_2 = 2


def fixture_ring():
    return skew_ring(2, 2)


def load(ring, text):
    return SkewPolyMatrix.from_text(ring, text)


def check_example1(ring=None) -> list:
    """Order-3 bases of the first fixture matrix: computed bases verify
    on both sides with pivot-degree multiset {1, 2}, the recorded bases
    verify too (literal coefficient match under the canonical modulus),
    and transposes are rejected by the opposite side's verifier."""
    ring = ring or fixture_ring()
    A = load(ring, EXAMPLE1_A)
    s = [0, 0]
    d = FIXTURE_ORDER_1
    results = []
    BL = left_pm_basis(d, A, s)
    BR = right_pm_basis(d, A, s)
    results.append(("left basis verifies",
                    verify_approximant_basis(A, d, s, "left", BL)))
    results.append(("right basis verifies",
                    verify_approximant_basis(A, d, s, "right", BR)))
    results.append(("left pivot degrees {1,2}",
                    sorted(pivot_degrees(BL)) == [1, 2]))
    results.append(("right pivot degrees {1,2}",
                    sorted(pivot_degrees(BR)) == [1, 2]))
    results.append(("recorded left basis verifies",
                    verify_approximant_basis(A, d, s, "left",
                                             load(ring, EXAMPLE1_B_LEFT))))
    results.append(("recorded right basis verifies",
                    verify_approximant_basis(A, d, s, "right",
                                             load(ring, EXAMPLE1_B_RIGHT))))
    results.append(("computed left basis matches recorded",
                    BL == load(ring, EXAMPLE1_B_LEFT)))
    results.append(("computed right basis matches recorded",
                    BR == load(ring, EXAMPLE1_B_RIGHT)))
    results.append(("right transpose rejected by left verifier",
                    not verify_approximant_basis(A, d, s, "left",
                                                 BR.transpose())))
    results.append(("left transpose rejected by right verifier",
                    not verify_approximant_basis(A, d, s, "right",
                                                 BL.transpose())))
    return results


def _commutative_product_low(field, pa, pb, d):
    out = [0] * d
    for i, ai in enumerate(pa):
        if not ai:
            continue
        for j, bj in enumerate(pb):
            if bj and i + j < d:
                out[i + j] = field.add(out[i + j], field.mul(ai, bj))
    return out


def check_example2(ring=None) -> list:
    """The order-2 regression: the commutative basis of the
    coefficient-mapped matrix is a genuine order-2 basis over F_4[x]
    (approximant condition re-checked by plain convolution) but its
    skew image is rejected by the skew verifier."""
    ring = ring or fixture_ring()
    field = ring.field
    A = load(ring, EXAMPLE2_A)
    Bhat = load(ring, EXAMPLE2_B_COMMUTATIVE)
    d = FIXTURE_ORDER_2
    results = []
    # phi^{-1}(A): untwist coefficient i by sigma^{-i}
    Ahat = [[[ring.sigma(c, -i) for i, c in enumerate(A.rows[r][t].c)]
             for t in range(2)] for r in range(2)]
    Bh = [[list(Bhat.rows[r][t].c) for t in range(2)] for r in range(2)]
    comm_ok = True
    for r in range(2):
        for t in range(2):
            acc = [0] * d
            for u in range(2):
                lo = _commutative_product_low(field, Ahat[r][u], Bh[u][t], d)
                acc = [field.add(x, y) for x, y in zip(acc, lo)]
            if any(acc):
                comm_ok = False
    results.append(("commutative basis is an order-2 approximant", comm_ok))
    # phi is the identity on this Bhat (all coefficients sigma-fixed)
    results.append(("skew image violates the order condition",
                    not (A * Bhat).truncate(d).is_zero()))
    results.append(("skew verifier rejects the mapped basis",
                    not verify_approximant_basis(A, d, [0, 0], "right", Bhat)))
    return results


def check_all() -> list:
    return [("example1: " + n, ok) for n, ok in check_example1()] + \
        [("example2: " + n, ok) for n, ok in check_example2()]


def dump_all() -> str:
    parts = []
    for name, text in [("example1.A", EXAMPLE1_A),
                       ("example1.B_left", EXAMPLE1_B_LEFT),
                       ("example1.B_right", EXAMPLE1_B_RIGHT),
                       ("example2.A", EXAMPLE2_A),
                       ("example2.B_commutative", EXAMPLE2_B_COMMUTATIVE)]:
        parts.append(f"fixture {name}")
        parts.append(text.rstrip("\n"))
    return "\n".join(parts) + "\n"
