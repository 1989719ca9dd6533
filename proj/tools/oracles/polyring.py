"""Minimal exact computer algebra for K[x,y,z]/(F), K = Q or F_p.

Stdlib-only reference implementation used to freeze expected values for the
C++ test suite. Deliberately shares no code or conventions-by-copy with the
C++ tree; everything here is recomputed from first principles.
"""

from fractions import Fraction
from functools import cmp_to_key
import itertools


# ---------- monomials (exponent tuples) ----------

def grevlex_cmp(a, b):
    """Return -1, 0, 1 comparing a, b in graded reverse lexicographic order."""
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    for d in (x - y for x, y in zip(reversed(a), reversed(b))):
        if d != 0:
            return 1 if d < 0 else -1
    return 0


GREVLEX_KEY = cmp_to_key(grevlex_cmp)


def monomials(deg, nvars=3):
    """All exponent tuples of total degree deg, grevlex-descending."""
    if deg < 0:
        return []
    out = [t for t in itertools.product(range(deg + 1), repeat=nvars)
           if sum(t) == deg]
    out.sort(key=GREVLEX_KEY, reverse=True)
    return out


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


# ---------- coefficient fields ----------

class Field:
    def __init__(self, p):
        self.p = p  # 0 means Q

    def of(self, n):
        return n % self.p if self.p else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def inv(self, a):
        if self.p:
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def is_zero(self, a):
        return a == 0


# ---------- polynomials: dict mono -> coefficient ----------

def poly_clean(d):
    return {m: c for m, c in d.items() if c != 0}


def poly_add(K, f, g):
    out = dict(f)
    for m, c in g.items():
        out[m] = K.add(out.get(m, K.of(0)), c)
    return poly_clean(out)


def poly_scale(K, c, f):
    return poly_clean({m: K.mul(c, v) for m, v in f.items()})


def poly_mul(K, f, g):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = mono_mul(m1, m2)
            out[m] = K.add(out.get(m, K.of(0)), K.mul(c1, c2))
    return poly_clean(out)


def poly_pow(K, f, e):
    out = {(0,) * len(next(iter(f))): K.of(1)} if f else {}
    for _ in range(e):
        out = poly_mul(K, out, f)
    return out


def poly_deg(f):
    return max(sum(m) for m in f) if f else -1


def parse_terms(K, terms, nvars=3):
    """Build a polynomial from (coeff, exponent-tuple) pairs."""
    out = {}
    for c, m in terms:
        m = tuple(m)
        out[m] = K.add(out.get(m, K.of(0)), K.of(c))
    return poly_clean(out)


# ---------- the graded ring R = K[x,y,z]/(F) ----------

class Ring:
    def __init__(self, p, F_terms, nvars=3):
        self.K = Field(p)
        self.p = p
        self.nvars = nvars
        self.F = parse_terms(self.K, F_terms, nvars)
        degs = {sum(m) for m in self.F}
        assert len(degs) == 1, "F must be homogeneous"
        self.delta = degs.pop()
        self.lm = max(self.F, key=GREVLEX_KEY)
        self.lc = self.F[self.lm]
        self._basis = {}

    def genus(self):
        return (self.delta - 1) * (self.delta - 2) // 2

    def nf(self, f):
        """Normal form: no monomial divisible by lm(F)."""
        f = poly_clean(dict(f))
        while True:
            red = [m for m in f if divides(self.lm, m)]
            if not red:
                return f
            m = max(red, key=GREVLEX_KEY)
            fac = self.K.mul(f[m], self.K.inv(self.lc))
            q = tuple(a - b for a, b in zip(m, self.lm))
            for fm, fc in self.F.items():
                mm = mono_mul(q, fm)
                f[mm] = self.K.add(f.get(mm, self.K.of(0)),
                                   self.K.neg(self.K.mul(fac, fc)))
                if f[mm] == 0:
                    del f[mm]
        return f

    def basis(self, m):
        if m not in self._basis:
            self._basis[m] = [t for t in monomials(m, self.nvars)
                              if not divides(self.lm, t)]
        return self._basis[m]

    def hilbert(self, m):
        return len(self.basis(m))

    def coords(self, f, m):
        f = self.nf(f)
        b = self.basis(m)
        idx = {t: i for i, t in enumerate(b)}
        v = [self.K.of(0)] * len(b)
        for mono, c in f.items():
            assert sum(mono) == m, "inhomogeneous coords"
            v[idx[mono]] = c
        return v

    def mult_columns(self, g, m):
        """Columns of multiplication by g: R_m -> R_{m+deg g}, as row lists."""
        e = poly_deg(g)
        cols = []
        for t in self.basis(m):
            prod = self.nf(poly_mul(self.K, g, {t: self.K.of(1)}))
            cols.append(self.coords(prod, m + e))
        return cols  # list of column vectors


# ---------- linear algebra over K ----------

def rref(K, rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = K.inv(rows[r][c])
        rows[r] = [K.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [K.add(a, K.neg(K.mul(f, b)))
                           for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_of_cols(K, cols):
    if not cols:
        return 0
    rows = [list(r) for r in zip(*cols)]
    return len(rref(K, rows)[1])


def nullspace_of_cols(K, cols, ncols=None):
    """Kernel basis of the matrix with the given columns (canonical)."""
    n = len(cols) if ncols is None else ncols
    if n == 0:
        return []
    if not cols or not cols[0]:
        # zero-row matrix: identity kernel
        basis = []
        for j in range(n):
            v = [K.of(0)] * n
            v[j] = K.of(1)
            basis.append(v)
        return basis
    rows = [list(r) for r in zip(*cols)]
    R, piv = rref(K, rows)
    pivset = set(piv)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    for j in free:
        v = [K.of(0)] * n
        v[j] = K.of(1)
        for i, pc in enumerate(piv):
            v[pc] = K.neg(R[i][j])
        basis.append(v)
    return basis


def solve_cols(K, cols, rhs):
    """One solution of cols * x = rhs with free variables zero, or None."""
    if not cols:
        return None if any(v != 0 for v in rhs) else []
    rows = [list(r) + [rv] for r, rv in zip(zip(*cols), rhs)]
    R, piv = rref(K, rows)
    n = len(cols)
    for row in R:
        if all(v == 0 for v in row[:n]) and row[n] != 0:
            return None
    x = [K.of(0)] * n
    for i, pc in enumerate(piv):
        if pc == n:
            return None
        x[pc] = R[i][n]
    return x


# ---------- ideals and syzygies ----------

class Ideal:
    def __init__(self, ring, gens_terms):
        self.R = ring
        self.gens = [parse_terms(ring.K, g, ring.nvars) for g in gens_terms]
        self.degs = [poly_deg(g) for g in self.gens]

    def stacked_cols(self, m):
        """Columns of (+) R_{m-d_i} -> R_m, concatenated per generator."""
        cols = []
        self.block_sizes = []
        for g, d in zip(self.gens, self.degs):
            if m - d < 0:
                self.block_sizes.append(0)
                continue
            cc = self.R.mult_columns(g, m - d)
            self.block_sizes.append(len(cc))
            cols.extend(cc)
        # pad zero-column case so coords align
        return cols

    def ideal_dim(self, m):
        return rank_of_cols(self.R.K, self.stacked_cols(m))

    def rel_basis(self, m):
        cols = self.stacked_cols(m)
        if not cols:
            return []
        ker = nullspace_of_cols(self.R.K, cols)
        out = []
        for v in ker:
            comps = []
            off = 0
            for d, bs in zip(self.degs, self.block_sizes):
                comp = {}
                if bs:
                    b = self.R.basis(m - d)
                    for t, c in zip(b, v[off:off + bs]):
                        if c != 0:
                            comp[t] = c
                off += bs
                comps.append(comp)
            out.append(comps)
        return out

    def rel_dim(self, m):
        return len(self.rel_basis(m))

    def membership(self, f0):
        m = poly_deg(f0)
        if m < 0:
            return []
        cols = self.stacked_cols(m)
        rhs = self.R.coords(f0, m)
        return solve_cols(self.R.K, cols, rhs)

    def primary_witness(self, nmax=None):
        if nmax is None:
            nmax = sum(self.degs) + self.R.delta
        for N in range(1, nmax + 1):
            if self.R.hilbert(N) == self.ideal_dim(N):
                return N
        return None
