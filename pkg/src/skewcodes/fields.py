"""Exact arithmetic in F_q (q prime) and F_{q^m}, plus F_q-linear algebra.

Elements of F_{q^m} = F_q[z]/(modulus) are represented as plain Python
ints encoding the coordinate vector in the power basis, little-endian
base q: the element c_0 + c_1 z + ... + c_{m-1} z^{m-1} corresponds to
the integer c_0 + c_1 q + ... + c_{m-1} q^{m-1}.  In particular the
integers 0..q-1 are exactly the embedded prime subfield.

For fields of order up to ``_TABLE_MAX`` the constructor precomputes
exp/log tables (multiplication, inversion) and per-power Frobenius
lookup tables; larger fields fall back to polynomial arithmetic with
inversion by the extended Euclidean algorithm on the modulus.  Both
paths implement the same exact semantics.

Only prime q is supported.  The modulus is verified irreducible at
construction by trial division against all monic polynomials of degree
at most m/2; the default modulus is the lexicographically first monic
irreducible (smallest integer encoding of the non-leading coefficients).
"""

from __future__ import annotations

import itertools

_TABLE_MAX = 1 << 20
_ADD_TABLE_MAX = 1 << 10

NEG_INF = float("-inf")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Dense polynomial helpers over F_q (coefficient lists, used only during
# field construction and on the non-tabled fallback paths).
# ---------------------------------------------------------------------------

def _fqp_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _fqp_mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _fqp_trim(out)


def _fqp_divmod(a, b, q):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, q - 2, q)
    quo = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lb) % q
        k = len(a) - 1 - db
        quo[k] = c
        for i, bi in enumerate(b):
            a[k + i] = (a[k + i] - c * bi) % q
        _fqp_trim(a)
    return _fqp_trim(quo), a


def _fqp_is_irreducible(p, q):
    m = len(p) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for idx in range(q ** d):
            g, v = [], idx
            for _ in range(d):
                g.append(v % q)
                v //= q
            g.append(1)
            if not _fqp_divmod(p, g, q)[1]:
                return False
    return True


def _first_irreducible(q, m):
    if m == 1:
        return (0, 1)  # z itself: F_q[z]/(z) = F_q
    for idx in itertools.count():
        if idx >= q ** m:
            raise RuntimeError("no irreducible found (impossible)")
        coeffs, v = [], idx
        for _ in range(m):
            coeffs.append(v % q)
            v //= q
        coeffs.append(1)
        if _fqp_is_irreducible(coeffs, q):
            return tuple(coeffs)


def _factor(n):
    fs, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return fs


class ExtField:
    """The extension field F_{q^m} over F_q, elements encoded as ints."""

    def __init__(self, q: int, m: int, modulus=None):
        if not _is_prime(q):
            raise ValueError(f"q = {q} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.q = q
        self.m = m
        self.order = q ** m
        if modulus is None:
            modulus = _first_irreducible(q, m)
        else:
            modulus = tuple(c % q for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _fqp_is_irreducible(list(modulus), q):
                raise ValueError(f"modulus {modulus} is reducible over F_{q}")
        self.modulus = modulus
        self.zero = 0
        self.one = 1

        # z^k mod modulus for k = m .. 2m-2, as encoded elements
        self._xpow = []
        red = [(-c) % q for c in modulus[:-1]]  # coefficient list of z^m
        self._xpow.append(self._encode(red))
        for _ in range(m - 2):
            red = self._shift_reduce(red)
            self._xpow.append(self._encode(red))

        self._tabled = self.order <= _TABLE_MAX
        self._exp = self._log = None
        self._frob_tables = {}
        self._frob_matrices = {}
        self._add_table = None
        if self._tabled:
            self._build_tables()
        if q != 2 and self.order <= _ADD_TABLE_MAX:
            self._add_table = [
                [self._add_digits(a, b) for b in range(self.order)]
                for a in range(self.order)
            ]

    # -- representation ----------------------------------------------------

    def __repr__(self):
        return f"ExtField(q={self.q}, m={self.m})"

    def coords(self, a: int):
        """Coordinates of a in the power basis, little-endian tuple."""
        q = self.q
        out = []
        for _ in range(self.m):
            out.append(a % q)
            a //= q
        return tuple(out)

    def from_coords(self, cs) -> int:
        a = 0
        for c in reversed(list(cs)):
            a = a * self.q + (c % self.q)
        return a

    def to_digits(self, a: int) -> str:
        """Little-endian coordinate digit string, e.g. '01' for z in F_4."""
        return "".join(str(c) for c in self.coords(a))

    def from_digits(self, s: str) -> int:
        if len(s) != self.m:
            raise ValueError(f"expected {self.m} digits, got {s!r}")
        return self.from_coords(int(ch) for ch in s)

    def elements(self):
        return range(self.order)

    def _encode(self, coeffs) -> int:
        a = 0
        for c in reversed(coeffs):
            a = a * self.q + (c % self.q)
        return a

    def _shift_reduce(self, red):
        # multiply the coefficient list (length m) by z, reduce by modulus
        q, m = self.q, self.m
        top = red[-1]
        out = [0] + red[:-1]
        if top:
            for i in range(m):
                out[i] = (out[i] - top * self.modulus[i]) % q
        return out

    # -- additive structure --------------------------------------------------

    def _add_digits(self, a, b):
        q = self.q
        out, mult = 0, 1
        while a or b:
            out += ((a % q + b % q) % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        q = self.q
        out, mult = 0, 1
        while a:
            out += ((q - a % q) % q) * mult
            a //= q
            mult *= q
        return out

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    # -- multiplicative structure --------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        q, m = self.q, self.m
        if q == 2:
            # carryless multiply, then fold the high bits through z^k tables
            p = 0
            aa = a
            while b:
                if b & 1:
                    p ^= aa
                aa <<= 1
                b >>= 1
            low = p & ((1 << m) - 1)
            p >>= m
            k = 0
            while p:
                if p & 1:
                    low ^= self._xpow[k]
                p >>= 1
                k += 1
            return low
        ca, cb = self.coords(a), self.coords(b)
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    conv[i + j] += ai * bj
        res = self._encode([c % q for c in conv[:m]])
        for k in range(m, 2 * m - 1):
            c = conv[k] % q
            if c:
                res = self.add(res, self.scal(c, self._xpow[k - m]))
        return res

    def scal(self, c: int, a: int) -> int:
        """Multiply by the prime-subfield scalar c (0 <= c < q), digitwise."""
        c %= self.q
        if c == 0:
            return 0
        if c == 1:
            return a
        q = self.q
        out, mult = 0, 1
        while a:
            out += ((a % q) * c % q) * mult
            a //= q
            mult *= q
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            n1 = self.order - 1
            return self._exp[(n1 - self._log[a]) % n1]
        # extended Euclid on (a, modulus) over F_q[z]
        q = self.q
        r0, r1 = list(self.modulus), list(self.coords(a))
        _fqp_trim(r1)
        s0, s1 = [], [1]
        while r1:
            quo, rem = _fqp_divmod(r0, r1, q)
            r0, r1 = r1, rem
            s0, s1 = s1, _fqp_trim(
                [(x - y) % q for x, y in itertools.zip_longest(
                    s0, _fqp_mul(quo, s1, q), fillvalue=0)])
        lead_inv = pow(r0[-1], q - 2, q)
        return self._encode([(c * lead_inv) % q for c in s0] + [0] * self.m)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError
            return 0 if e else 1
        if self._exp is not None:
            n1 = self.order - 1
            return self._exp[(self._log[a] * e) % n1]
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    # -- tables ----------------------------------------------------------------

    def _build_tables(self):
        g = self.primitive_element_raw()
        n1 = self.order - 1
        exp = [0] * (2 * n1)
        log = [0] * self.order
        v = 1
        for i in range(n1):
            exp[i] = v
            exp[i + n1] = v
            log[v] = i
            v = self._mul_raw(v, g)
        self._exp, self._log = exp, log
        self._gamma = g

    def primitive_element_raw(self) -> int:
        n1 = self.order - 1
        if n1 == 1:
            return 1
        primes = _factor(n1)
        for g in range(2, self.order):
            ok = True
            for p in primes:
                r, e, a = 1, n1 // p, g
                while e:
                    if e & 1:
                        r = self._mul_raw(r, a)
                    a = self._mul_raw(a, a)
                    e >>= 1
                if r == 1:
                    ok = False
                    break
            if ok:
                return g
        raise RuntimeError("no primitive element (impossible)")

    def primitive_element(self) -> int:
        if self._exp is not None:
            return self._gamma
        return self.primitive_element_raw()

    def gen(self) -> int:
        """The power-basis generator z (equals q as an encoded element)."""
        return self.q if self.m > 1 else 1

    # -- Frobenius  ---------------------------------------------------------

    def frob(self, a: int, j: int = 1) -> int:
        """a^(q^j); j is reduced mod m (negative allowed)."""
        j %= self.m
        if j == 0 or a == 0:
            return a
        if self._tabled:
            tab = self._frob_tables.get(j)
            if tab is None:
                tab = self._build_frob_table(j)
            return tab[a]
        return self.pow_(a, self.q ** j)

    def _build_frob_table(self, j):
        n1 = self.order - 1
        qj = pow(self.q, j, n1)
        exp, log = self._exp, self._log
        tab = [0] * self.order
        for a in range(1, self.order):
            tab[a] = exp[(log[a] * qj) % n1]
        self._frob_tables[j] = tab
        return tab

    def frob_matrix(self, j: int):
        """The m x m matrix over F_q of a |-> a^(q^j) in the power basis."""
        j %= self.m
        mat = self._frob_matrices.get(j)
        if mat is not None:
            return mat
        w = self.frob(self.gen() if self.m > 1 else 1, j)
        cols = []
        acc = 1
        for _ in range(self.m):
            cols.append(self.coords(acc))
            acc = self.mul(acc, w) if self.m > 1 else acc
        if self.m == 1:
            cols = [(1,)]
        mat = [[cols[i][r] for i in range(self.m)] for r in range(self.m)]
        self._frob_matrices[j] = mat
        return mat

    # -- randomness --------------------------------------------------------

    def rand(self, rng) -> int:
        return rng.randrange(self.order)

    def rand_nonzero(self, rng) -> int:
        return rng.randrange(1, self.order)


class Automorphism:
    """A generator sigma = Frob^i of Gal(F_{q^m}/F_q), gcd(i, m) = 1."""

    def __init__(self, field: ExtField, i: int = 1):
        import math

        i %= field.m if field.m > 1 else 1
        if field.m > 1 and math.gcd(i, field.m) != 1:
            raise ValueError(f"gcd({i}, {field.m}) != 1: sigma must generate")
        self.field = field
        self.i = i if field.m > 1 else 0

    def apply(self, a: int, j: int = 1) -> int:
        """sigma^j(a) = a^(q^(i*j mod m)); j may be negative."""
        return self.field.frob(a, (self.i * j) % self.field.m)

    def __repr__(self):
        return f"Automorphism(Frob^{self.i} on {self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, Automorphism)
                and self.field is other.field and self.i == other.i)

    def __hash__(self):
        return hash((id(self.field), self.i))


_FIELD_CACHE: dict = {}


def get_field(q: int, m: int, modulus=None) -> ExtField:
    """Memoized field constructor (fields are immutable and shareable)."""
    key = (q, m, tuple(modulus) if modulus is not None else None)
    f = _FIELD_CACHE.get(key)
    if f is None:
        f = ExtField(q, m, modulus)
        _FIELD_CACHE[key] = f
    return f


def new_field(q: int, m: int, modulus=None) -> ExtField:
    return get_field(q, m, modulus)


def apply_frobenius(aut: Automorphism, a: int, j: int) -> int:
    return aut.apply(a, j)


# ---------------------------------------------------------------------------
# F_q / F_{q^m} linear algebra
# ---------------------------------------------------------------------------

def fq_expand(field: ExtField, M, orientation: str):
    """Expand each F_{q^m} entry of M into m coordinates over F_q.

    orientation 'row': each entry becomes a 1 x m row slice, so an
    n x c input becomes n x (m*c).  orientation 'column': each entry
    becomes an m x 1 column slice, so the result is (m*n) x c.
    """
    if orientation == "row":
        return [[d for a in row for d in field.coords(a)] for row in M]
    if orientation == "column":
        out = []
        for row in M:
            cs = [field.coords(a) for a in row]
            for t in range(field.m):
                out.append([c[t] for c in cs])
        return out
    raise ValueError(f"bad orientation {orientation!r}")


def rref_with_pivots(field, rows):
    """Reduced row echelon form over an arbitrary field object.

    Returns (R, pivot_columns).  Works for ExtField of any degree,
    including degree 1 (the prime field).
    """
    R = [list(r) for r in rows]
    if not R:
        return R, []
    nr, nc = len(R), len(R[0])
    piv = []
    r = 0
    for c in range(nc):
        p = None
        for i in range(r, nr):
            if R[i][c]:
                p = i
                break
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = field.inv(R[r][c])
        if inv != 1:
            R[r] = [field.mul(inv, x) for x in R[r]]
        for i in range(nr):
            if i != r and R[i][c]:
                f = R[i][c]
                Ri, Rr = R[i], R[r]
                R[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(Ri, Rr)]
        piv.append(c)
        r += 1
        if r == nr:
            break
    return R, piv


def fq_rref_with_profile(q: int, M):
    """RREF over F_q with row and column rank profiles (0-based).

    The column profile lists the pivot columns of the row echelon form;
    the row profile lists the lexicographically first independent rows
    (pivot columns of the echelon form of the transpose).
    """
    fq = get_field(q, 1)
    R, col_profile = rref_with_pivots(fq, M)
    if M and M[0]:
        Mt = [[M[i][j] for i in range(len(M))] for j in range(len(M[0]))]
        _, row_profile = rref_with_pivots(fq, Mt)
    else:
        row_profile = []
    return R, row_profile, col_profile


def fq_rank(q: int, M) -> int:
    if not M or not M[0]:
        return 0
    _, piv = rref_with_pivots(get_field(q, 1), M)
    return len(piv)


def fq_kernel_basis(q: int, M):
    """Basis of the right kernel {v : M v = 0} over F_q, as row tuples."""
    if not M:
        return []
    nc = len(M[0])
    fq = get_field(q, 1)
    R, piv = rref_with_pivots(fq, M)
    free = [c for c in range(nc) if c not in piv]
    basis = []
    for fc in free:
        v = [0] * nc
        v[fc] = 1
        for r, pc in enumerate(piv):
            v[pc] = (-R[r][fc]) % q
        basis.append(v)
    return basis


def fq_solve(q: int, M, rhs):
    """One solution of M v = rhs over F_q, or None if inconsistent."""
    if not M:
        return [] if not any(rhs) else None
    nc = len(M[0])
    aug = [list(row) + [b] for row, b in zip(M, rhs)]
    fq = get_field(q, 1)
    R, piv = rref_with_pivots(fq, aug)
    if nc in piv:
        return None
    v = [0] * nc
    for r, pc in enumerate(piv):
        v[pc] = R[r][nc]
    return v


def fqm_linear_solve(field: ExtField, A, B):
    """Solve A X = B over F_{q^m} for square invertible A."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("A must be square")
    w = len(B[0]) if B and isinstance(B[0], (list, tuple)) else None
    if w is None:
        aug = [list(ra) + [b] for ra, b in zip(A, B)]
    else:
        aug = [list(ra) + list(rb) for ra, rb in zip(A, B)]
    R, piv = rref_with_pivots(field, aug)
    if len(piv) < n or piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    if w is None:
        return [R[i][n] for i in range(n)]
    return [R[i][n:] for i in range(n)]
