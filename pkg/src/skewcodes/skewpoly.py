"""The skew polynomial ring F_{q^m}[x; sigma].

Polynomials are coefficient tuples in ascending degree with a nonzero
trailing entry; the empty tuple is the zero polynomial, whose degree is
the distinguished value float('-inf').  Multiplication follows the
twist rule x * a = sigma(a) * x, so

    (f * g)_i = sum_j f_j sigma^j(g_{i-j}).

Both Euclidean divisions are available: ``left_divmod(a, h)`` returns
(chi, r) with a = h*chi + r, and ``right_divmod(a, h)`` returns (chi, r)
with a = chi*h + r, both with deg r < deg h.

Text form used by CLI fixtures: terms "D*x^k" joined by " + " in
descending degree, where D is the little-endian coordinate digit string
of the coefficient (constants are printed as bare digit strings, the
zero polynomial as "0").
"""

from __future__ import annotations

from .fields import Automorphism, ExtField, NEG_INF, get_field


class SkewPolyRing:
    """F_{q^m}[x; sigma] for sigma = Frob^i with gcd(i, m) = 1."""

    def __init__(self, aut: Automorphism, mul_strategy: str = "schoolbook"):
        self.aut = aut
        self.field = aut.field
        if mul_strategy not in MUL_STRATEGIES:
            raise ValueError(f"unknown multiplication strategy {mul_strategy!r}")
        self.mul_strategy = mul_strategy
        self._sig_tables = {}

    def __repr__(self):
        return f"SkewPolyRing({self.field!r}, sigma=Frob^{self.aut.i})"

    def __eq__(self, other):
        return (isinstance(other, SkewPolyRing)
                and self.field is other.field and self.aut.i == other.aut.i)

    def __hash__(self):
        return hash((id(self.field), self.aut.i))

    def sigma(self, a: int, j: int = 1) -> int:
        return self.aut.apply(a, j)

    def sigma_table(self, j: int):
        """Full lookup list for sigma^j on tabled fields, else None."""
        f = self.field
        if not f._tabled:
            return None
        j = (self.aut.i * j) % f.m
        tab = self._sig_tables.get(j)
        if tab is None:
            if j == 0:
                tab = None  # identity; callers use the element directly
                self._sig_tables[j] = None
            else:
                f.frob(1, j)  # force table build
                tab = f._frob_tables[j]
                self._sig_tables[j] = tab
        return self._sig_tables[j]

    # -- constructors -------------------------------------------------------

    def poly(self, coeffs) -> "SkewPoly":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return SkewPoly(self, tuple(c))

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, ())

    def one(self) -> "SkewPoly":
        return SkewPoly(self, (1,))

    def x(self) -> "SkewPoly":
        return SkewPoly(self, (0, 1))

    def const(self, a: int) -> "SkewPoly":
        return SkewPoly(self, (a,) if a else ())

    def monomial(self, a: int, e: int) -> "SkewPoly":
        if a == 0:
            return self.zero()
        return SkewPoly(self, (0,) * e + (a,))

    def random_poly(self, rng, max_deg: int, monic: bool = False) -> "SkewPoly":
        c = [self.field.rand(rng) for _ in range(max_deg + 1)]
        if monic:
            c[-1] = 1
        return self.poly(c)

    def from_text(self, s: str) -> "SkewPoly":
        s = s.strip()
        if s == "0":
            return self.zero()
        coeffs = {}
        for term in s.split("+"):
            term = term.strip()
            if "*" in term:
                dig, xp = term.split("*")
                e = int(xp.strip().lstrip("x^") or 1)
            elif term.startswith("x"):
                dig, e = None, int(term.lstrip("x^") or 1)
            else:
                dig, e = term, 0
            a = self.field.from_digits(dig.strip()) if dig is not None else 1
            coeffs[e] = self.field.add(coeffs.get(e, 0), a)
        out = [0] * (max(coeffs) + 1)
        for e, a in coeffs.items():
            out[e] = a
        return self.poly(out)


def skew_ring(q: int, m: int, i: int = 1, modulus=None) -> SkewPolyRing:
    return SkewPolyRing(Automorphism(get_field(q, m, modulus), i))


def _mul_schoolbook(ring: SkewPolyRing, fa, fb):
    field = ring.field
    out = [0] * (len(fa) + len(fb) - 1)
    add, mul = field.add, field.mul
    mm = field.m
    for j, fj in enumerate(fa):
        if not fj:
            continue
        tab = ring.sigma_table(j)
        if tab is not None:
            for i, gi in enumerate(fb):
                if gi:
                    k = j + i
                    out[k] = add(out[k], mul(fj, tab[gi]))
        elif (ring.aut.i * j) % mm == 0:
            for i, gi in enumerate(fb):
                if gi:
                    k = j + i
                    out[k] = add(out[k], mul(fj, gi))
        else:
            sig = ring.sigma
            for i, gi in enumerate(fb):
                if gi:
                    k = j + i
                    out[k] = add(out[k], mul(fj, sig(gi, j)))
    return out


def _mul_by_g(ring: SkewPolyRing, fa, fb):
    # same product accumulated g-major; exists to exercise the strategy seam
    field = ring.field
    out = [0] * (len(fa) + len(fb) - 1)
    add, mul = field.add, field.mul
    sig = ring.sigma
    for i, gi in enumerate(fb):
        if not gi:
            continue
        for j, fj in enumerate(fa):
            if fj:
                k = j + i
                out[k] = add(out[k], mul(fj, sig(gi, j)))
    return out


MUL_STRATEGIES = {
    "schoolbook": _mul_schoolbook,
    "schoolbook-gmajor": _mul_by_g,
}


class SkewPoly:
    __slots__ = ("ring", "c")

    def __init__(self, ring: SkewPolyRing, coeffs: tuple):
        self.ring = ring
        self.c = coeffs

    # -- basics ------------------------------------------------------------

    @property
    def degree(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self) -> bool:
        return not self.c

    def coeff(self, i: int) -> int:
        return self.c[i] if 0 <= i < len(self.c) else 0

    @property
    def lead_coeff(self) -> int:
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __eq__(self, other):
        return (isinstance(other, SkewPoly) and self.ring == other.ring
                and self.c == other.c)

    def __hash__(self):
        return hash((self.ring, self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"<{self.to_text()}>"

    def to_text(self) -> str:
        if not self.c:
            return "0"
        field = self.ring.field
        terms = []
        for e in range(len(self.c) - 1, -1, -1):
            a = self.c[e]
            if not a:
                continue
            d = field.to_digits(a)
            terms.append(d if e == 0 else f"{d}*x^{e}")
        return " + ".join(terms)

    # -- additive ------------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("skew polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        add = self.ring.field.add
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = add(out[i], v)
        return self.ring.poly(out)

    def __neg__(self):
        neg = self.ring.field.neg
        return SkewPoly(self.ring, tuple(neg(v) for v in self.c))

    def __sub__(self, other):
        return self + (-other)

    # -- multiplicative ------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, int):
            return self.rmul_scalar(other)
        self._check(other)
        if not self.c or not other.c:
            return self.ring.zero()
        out = MUL_STRATEGIES[self.ring.mul_strategy](self.ring, self.c, other.c)
        return self.ring.poly(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.lmul_scalar(other)
        return NotImplemented

    def lmul_scalar(self, a: int) -> "SkewPoly":
        """a * f (coefficients multiplied on the left)."""
        if a == 0:
            return self.ring.zero()
        mul = self.ring.field.mul
        return self.ring.poly([mul(a, v) for v in self.c])

    def rmul_scalar(self, a: int) -> "SkewPoly":
        """f * a = sum f_i sigma^i(a) x^i."""
        if a == 0:
            return self.ring.zero()
        mul = self.ring.field.mul
        sig = self.ring.sigma
        return self.ring.poly(
            [mul(v, sig(a, i)) if v else 0 for i, v in enumerate(self.c)])

    def times_x_right(self, e: int) -> "SkewPoly":
        """f * x^e (shift up, no coefficient twist)."""
        if not self.c or e == 0:
            return self if self.c else self.ring.zero()
        return SkewPoly(self.ring, (0,) * e + self.c)

    def times_x_left(self, e: int) -> "SkewPoly":
        """x^e * f = sum sigma^e(f_i) x^(i+e)."""
        if not self.c or e == 0:
            return self if self.c else self.ring.zero()
        sig = self.ring.sigma
        return SkewPoly(self.ring,
                        (0,) * e + tuple(sig(v, e) if v else 0 for v in self.c))

    def div_x_left(self, e: int) -> "SkewPoly":
        """x^(-e) * f, requires the e lowest coefficients to vanish."""
        if e == 0:
            return self
        if any(self.c[:e]):
            raise ValueError(f"x^{e} does not divide the polynomial")
        sig = self.ring.sigma
        return self.ring.poly([sig(v, -e) if v else 0 for v in self.c[e:]])

    def div_x_right(self, e: int) -> "SkewPoly":
        """f * x^(-e), requires the e lowest coefficients to vanish."""
        if e == 0:
            return self
        if any(self.c[:e]):
            raise ValueError(f"x^{e} does not divide the polynomial")
        return self.ring.poly(list(self.c[e:]))

    def truncate(self, d: int, side: str = "left") -> "SkewPoly":
        """f rem x^d from either side: drop coefficients of degree >= d."""
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if d <= 0:
            return self.ring.zero()
        return self.ring.poly(list(self.c[:d]))

    def monic(self) -> "SkewPoly":
        """Left-scale to leading coefficient 1 (generates the same left ideal)."""
        lc = self.lead_coeff
        if lc == 1:
            return self
        return self.lmul_scalar(self.ring.field.inv(lc))

    # -- Euclidean divisions ---------------------------------------------------

    def left_divmod(self, h: "SkewPoly"):
        """(chi, r) with self = h*chi + r and deg r < deg h."""
        self._check(h)
        if not h.c:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        sig = self.ring.sigma
        dh = len(h.c) - 1
        lc_inv = field.inv(h.c[-1])
        r = list(self.c)
        if len(r) - 1 < dh:
            return self.ring.zero(), self
        quo = [0] * (len(r) - dh)
        hc = h.c
        add, mul, neg = field.add, field.mul, field.neg
        while len(r) - 1 >= dh:
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < dh:
                break
            delta = len(r) - 1 - dh
            c = sig(mul(lc_inv, r[-1]), -dh)
            quo[delta] = c
            # subtract h * (c x^delta): coefficient at k+delta is h_k sigma^k(c)
            for k, hk in enumerate(hc):
                if hk:
                    idx = k + delta
                    r[idx] = add(r[idx], neg(mul(hk, sig(c, k))))
        return self.ring.poly(quo), self.ring.poly(r)

    def right_divmod(self, h: "SkewPoly"):
        """(chi, r) with self = chi*h + r and deg r < deg h."""
        self._check(h)
        if not h.c:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        sig = self.ring.sigma
        dh = len(h.c) - 1
        r = list(self.c)
        if len(r) - 1 < dh:
            return self.ring.zero(), self
        quo = [0] * (len(r) - dh)
        hc = h.c
        add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
        while len(r) - 1 >= dh:
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < dh:
                break
            delta = len(r) - 1 - dh
            c = mul(r[-1], inv(sig(hc[-1], delta)))
            quo[delta] = c
            # subtract (c x^delta) * h: coefficient at k+delta is c sigma^delta(h_k)
            for k, hk in enumerate(hc):
                if hk:
                    idx = k + delta
                    r[idx] = add(r[idx], neg(mul(c, sig(hk, delta))))
        return self.ring.poly(quo), self.ring.poly(r)

    def rem_left(self, h: "SkewPoly") -> "SkewPoly":
        return self.left_divmod(h)[1]

    def rem_right(self, h: "SkewPoly") -> "SkewPoly":
        return self.right_divmod(h)[1]


def llcm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic least left common multiple: the least-degree monic h with
    h = chi1*f = chi2*g.

    Computed by the extended Euclidean algorithm on right divisions,
    tracking left cofactors: when the remainder chain hits zero the
    cofactor row gives u*f = -v*g = llcm(f, g) (up to a left scalar).
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("llcm of the zero polynomial is undefined")
    ring = f.ring
    if g.degree == 0:
        # R*g = R: the intersection of left ideals is R*f
        return f.monic()
    if f.degree == 0:
        return g.monic()
    r0, r1 = f, g
    u0, u1 = ring.one(), ring.zero()
    while not r1.is_zero():
        q, r2 = r0.right_divmod(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
    # r1 == 0: u1*f + v1*g = 0, so u1*f is a common left multiple of minimal degree
    out = u1 * f
    return out.monic()
