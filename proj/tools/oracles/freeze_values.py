"""Recompute every frozen expected value used by the C++ test suite.

Run:  python3 tools/oracles/freeze_values.py
Emits a JSON document. The C++ tests embed these numbers as literals; if this
script and the library ever disagree, one of them has a bug.
"""

import json
import math
import sys

from polyring import (Ring, Ideal, Field, monomials, poly_mul, poly_pow,
                      parse_terms, rank_of_cols, nullspace_of_cols, solve_cols,
                      poly_add, poly_scale, GREVLEX_KEY)


def mono_str(m, names="xyz"):
    out = []
    for e, v in zip(m, names):
        if e == 1:
            out.append(v)
        elif e > 1:
            out.append(f"{v}^{e}")
    return "".join(out) or "1"


def poly_str(f):
    items = sorted(f.items(), key=lambda kv: GREVLEX_KEY(kv[0]), reverse=True)
    return " + ".join(f"{c}*{mono_str(m)}" for m, c in items) or "0"


FERMAT3 = [(1, (3, 0, 0)), (1, (0, 3, 0)), (1, (0, 0, 3))]
FERMAT4 = [(1, (4, 0, 0)), (1, (0, 4, 0)), (1, (0, 0, 4))]
FERMAT5 = [(1, (5, 0, 0)), (1, (0, 5, 0)), (1, (0, 0, 5))]

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def gens(*termlists):
    return list(termlists)


def hrel_sheaf(R, I, m):
    """(h0, h1_sheaf, h1_cokernel) for the relation sheaf twist m."""
    h0 = I.rel_dim(m)
    idim = I.ideal_dim(m)
    cok = R.hilbert(m) - idim
    # LES correction: sum h1(O(m-d_i)) - rank of h -> (f_i h) on R_{delta-3-m}
    corr = sum(R.hilbert(R.delta - 3 - (m - d)) for d in I.degs)
    s = R.delta - 3 - m
    if s >= 0:
        cols = []
        for j in range(R.hilbert(s)):
            col = []
            for g, d in zip(I.gens, I.degs):
                t = R.basis(s)[j]
                prod = R.nf(poly_mul(R.K, g, {t: R.K.of(1)}))
                col.extend(R.coords(prod, s + d))
            cols.append(col)
        corr -= rank_of_cols(R.K, cols)
    return h0, cok + corr, cok


def chi(R, I, m):
    n = len(I.gens)
    g = R.genus()
    return ((n - 1) * m - sum(I.degs)) * R.delta + (n - 1) * (1 - g)


def coset_reps(R, I, m):
    """Monomial basis of R_m/I_m: non-pivot positions of the row space."""
    cols = I.stacked_cols(m)
    b = R.basis(m)
    if not cols:
        return list(b)
    rows = [list(r) for r in zip(*[c for c in cols])]
    # row space of the transpose = column space; pivots of rref of transpose
    from polyring import rref
    _, piv = rref(R.K, [list(c) for c in cols])
    # pivots above are column indices of the generator matrix, not what we
    # want; instead reduce the transpose (generators as rows)
    _, piv = rref(R.K, [list(c) for c in cols])
    tr = [list(c) for c in cols]          # each generator-column as a row
    _, piv = rref(R.K, tr)
    pivset = set(piv)
    return [t for j, t in enumerate(b) if j not in pivset]


def cech_dim(R, a, N):
    """dim T_N = dim R_{a+2N}/(u^N R + v^N R) with u=x, v=y, by rank."""
    top = R.hilbert(a + 2 * N)
    if top == 0:
        return 0
    cols = []
    for t in R.basis(a + N):
        prod = R.nf(poly_mul(R.K, {(N, 0, 0): R.K.of(1)}, {t: R.K.of(1)}))
        cols.append(R.coords(prod, a + 2 * N))
    for t in R.basis(a + N):
        prod = R.nf(poly_mul(R.K, {(0, N, 0): R.K.of(1)}, {t: R.K.of(1)}))
        cols.append(R.coords(prod, a + 2 * N))
    return top - rank_of_cols(R.K, cols)


def forcing_zero(R, I, f0_terms, r_comps, k):
    """Independent recomputation of the component-class zero test."""
    from polyring import poly_deg
    K = R.K
    f0 = parse_terms(K, f0_terms)
    m = poly_deg(f0)
    M = I.primary_witness()
    sd = sum(I.degs)
    a = m + k - sd
    uM = {(M, 0, 0): K.of(1)}
    vM = {(0, M, 0): K.of(1)}
    acoef = I.membership(uM)
    bcoef = I.membership(vM)
    assert acoef is not None and bcoef is not None
    # unpack solution vectors into coefficient polynomials per generator
    def unpack(vec, deg):
        out, off = [], 0
        for d, bs in zip(I.degs, I.block_sizes):
            comp = {}
            bb = R.basis(deg - d) if bs else []
            for t, c in zip(bb, vec[off:off + bs]):
                if c != 0:
                    comp[t] = c
            off += bs
            out.append(comp)
        return out
    I.stacked_cols(M)
    apoly = unpack(acoef, M)
    I.stacked_cols(M)
    bpoly = unpack(bcoef, M)
    w = []
    for ai, bi in zip(apoly, bpoly):
        t1 = poly_mul(K, ai, vM)
        t2 = poly_mul(K, bi, uM)
        w.append(R.nf(poly_mul(K, f0, poly_add(K, t1, poly_scale(K, K.of(-1), t2)))))
    # cross-product quotient: c_i = t * f_i
    r1, r2, r3 = [R.nf(parse_terms(K, rc) if isinstance(rc, list) else rc)
                  for rc in r_comps]
    c1 = R.nf(poly_add(K, poly_mul(K, r2, w[2]), poly_scale(K, K.of(-1), poly_mul(K, r3, w[1]))))
    c2 = R.nf(poly_add(K, poly_mul(K, r3, w[0]), poly_scale(K, K.of(-1), poly_mul(K, r1, w[2]))))
    c3 = R.nf(poly_add(K, poly_mul(K, r1, w[1]), poly_scale(K, K.of(-1), poly_mul(K, r2, w[0]))))
    tau = a + 2 * M
    if tau < 0:
        assert not c1 and not c2 and not c3
        return True
    cols = []
    for t in R.basis(tau):
        col = []
        for g, d in zip(I.gens, I.degs):
            prod = R.nf(poly_mul(K, g, {t: K.of(1)}))
            col.extend(R.coords(prod, tau + d))
        cols.append(col)
    rhs = R.coords(c1, tau + I.degs[0]) + R.coords(c2, tau + I.degs[1]) \
        + R.coords(c3, tau + I.degs[2])
    tsol = solve_cols(K, cols, rhs)
    assert tsol is not None, "cross quotient must divide"
    tpoly = {}
    for t, c in zip(R.basis(tau), tsol):
        if c != 0:
            tpoly[t] = c
    # coboundary test at two truncation levels (stabilized and one beyond)
    results = []
    for N in (max(M, R.delta + abs(a) + 2), max(M, R.delta + abs(a) + 2) + 1):
        shift = poly_pow(K, {(1, 1, 0): K.of(1)}, N - M)
        num = R.nf(poly_mul(K, tpoly, shift))
        deg = a + 2 * N
        cols2 = []
        for t in R.basis(a + N):
            prod = R.nf(poly_mul(K, {(N, 0, 0): K.of(1)}, {t: K.of(1)}))
            cols2.append(R.coords(prod, deg))
        for t in R.basis(a + N):
            prod = R.nf(poly_mul(K, {(0, N, 0): K.of(1)}, {t: K.of(1)}))
            cols2.append(R.coords(prod, deg))
        rhs2 = R.coords(num, deg)
        results.append(solve_cols(K, cols2, rhs2) is not None)
    assert results[0] == results[1], "truncation not stabilized"
    return results[0]


def syzygy_mingens_2var(degs, gens2):
    """Minimal syzygy generator degrees over K[u,v] (polynomial ring)."""
    K = Field(0)

    def m2(deg):
        return [(deg - i, i) for i in range(deg + 1)] if deg >= 0 else []

    def mul2(f, g):
        out = {}
        for a, ca in f.items():
            for b, cb in g.items():
                mm = (a[0] + b[0], a[1] + b[1])
                out[mm] = out.get(mm, K.of(0)) + ca * cb
        return {m: c for m, c in out.items() if c != 0}

    def coords2(f, deg):
        b = m2(deg)
        idx = {t: i for i, t in enumerate(b)}
        v = [K.of(0)] * len(b)
        for mm, c in f.items():
            v[idx[mm]] = c
        return v

    found = []           # (degree, vector-of-polys)
    sd = sum(degs)
    for k in range(1, sd + 1):
        blocks = [m2(k - d) for d in degs]
        cols = []
        for bi, (b, d) in enumerate(zip(blocks, degs)):
            for t in b:
                col = []
                prod = mul2(gens2[bi], {t: K.of(1)})
                col = coords2(prod, k)
                cols.append(col)
        if not cols:
            continue
        ker = nullspace_of_cols(K, cols)
        # old generators span inside the syzygy space at degree k
        old_cols = []
        for kj, sig in found:
            for t in m2(k - kj):
                vec = []
                for comp, d in zip(sig, degs):
                    prod = mul2(comp, {t: K.of(1)})
                    vec.extend(coords2(prod, k - d))
                old_cols.append(vec)
        oldrank = rank_of_cols(K, old_cols)
        newdim = len(ker) - oldrank
        if newdim > 0:
            cur = old_cols[:]
            for v in ker:
                if len(found) == len(degs) - 1:
                    break
                if rank_of_cols(K, cur + [v]) > rank_of_cols(K, cur):
                    cur.append(v)
                    comps, off = [], 0
                    for b, d in zip(blocks, degs):
                        comp = {}
                        for t, c in zip(b, v[off:off + len(b)]):
                            if c != 0:
                                comp[t] = c
                        off += len(b)
                        comps.append(comp)
                    found.append((k, comps))
        if len(found) == len(degs) - 1:
            break
    return sorted(k for k, _ in found)


def main():
    out = {}

    # ---- graded ring basics ----
    R3 = Ring(0, FERMAT3)
    out["fermat3_hilbert_0_8"] = [R3.hilbert(m) for m in range(9)]
    out["fermat3_genus"] = R3.genus()
    out["fermat3_nf_x3"] = poly_str(R3.nf({(3, 0, 0): R3.K.of(1)}))
    xcols = R3.mult_columns({X: R3.K.of(1)}, 2)
    out["fermat3_mult_x_R2_R3_rank"] = rank_of_cols(R3.K, xcols)
    R5 = Ring(0, FERMAT5)
    out["fermat5_hilbert_0_8"] = [R5.hilbert(m) for m in range(9)]
    out["fermat5_genus"] = R5.genus()
    R4 = Ring(0, FERMAT4)
    out["fermat4_genus"] = R4.genus()

    # ---- smoothness: smallest N with full Jacobian degree piece ----
    def smooth_N(ring, Fterms, partial_coeff):
        K = ring.K
        F = parse_terms(K, Fterms)
        parts = []
        for vi in range(3):
            dF = {}
            for mm, c in F.items():
                if mm[vi] > 0:
                    m2 = list(mm)
                    m2[vi] -= 1
                    dF[tuple(m2)] = K.mul(c, K.of(mm[vi]))
            parts.append({m: c for m, c in dF.items() if c != 0})
        gens_all = [F] + [p for p in parts if p]
        degsG = [ring.delta] + [ring.delta - 1] * len([p for p in parts if p])
        for N in range(0, 3 * ring.delta + 1):
            target = monomials(N)
            idx = {t: i for i, t in enumerate(target)}
            cols = []
            for gpoly, dg in zip(gens_all, degsG):
                if N - dg < 0:
                    continue
                for t in monomials(N - dg):
                    prod = poly_mul(K, gpoly, {t: K.of(1)})
                    v = [K.of(0)] * len(target)
                    for mm, c in prod.items():
                        v[idx[mm]] = c
                    cols.append(v)
            if len(target) and rank_of_cols(K, cols) == len(target):
                return N
        return None

    out["fermat3_smooth_N"] = smooth_N(R3, FERMAT3, 3)
    out["fermat5_smooth_N"] = smooth_N(R5, FERMAT5, 5)

    # ---- (x^2,y^2,z^2) on the Fermat cubic ----
    Isq = Ideal(R3, gens([(1, (2, 0, 0))], [(1, (0, 2, 0))], [(1, (0, 0, 2))]))
    out["sq_rel_dims_m2_m5"] = [Isq.rel_dim(m) for m in range(2, 6)]
    rb = Isq.rel_basis(3)
    out["sq_rel3_basis"] = [[poly_str(c) for c in r] for r in rb]
    out["sq_ideal_dim3"] = Isq.ideal_dim(3)
    out["sq_primary_witness"] = Isq.primary_witness()
    out["sq_memb_xyz"] = Isq.membership({(1, 1, 1): R3.K.of(1)}) is not None
    out["sq_hrel"] = {str(m): list(hrel_sheaf(R3, Isq, m)) for m in range(0, 8)}
    out["sq_chi"] = {str(m): chi(R3, Isq, m) for m in range(0, 8)}

    # ---- (x,y) on the Fermat cubic ----
    Ixy = Ideal(R3, gens([(1, X)], [(1, Y)]))
    out["xy_primary_witness"] = Ixy.primary_witness()
    out["xy_coset_dims_m0_m4"] = [R3.hilbert(m) - Ixy.ideal_dim(m)
                                  for m in range(5)]
    out["xy_memb_z2"] = Ixy.membership({(0, 0, 2): R3.K.of(1)}) is not None
    out["xy_rel2_dim"] = Ixy.rel_dim(2)
    out["xy_hrel"] = {str(m): list(hrel_sheaf(R3, Ixy, m)) for m in range(0, 6)}
    out["xy_chi"] = {str(m): chi(R3, Ixy, m) for m in range(0, 6)}
    out["xyz_ideal_witness"] = Ideal(R3, gens([(1, X)], [(1, Y)], [(1, Z)])).primary_witness()

    # ---- (x^4, xy, y^2) on the Fermat cubic (splitting instance) ----
    Iind = Ideal(R3, gens([(1, (4, 0, 0))], [(1, (1, 1, 0))], [(1, (0, 2, 0))]))
    out["ind_primary_witness"] = Iind.primary_witness()
    out["ind_rel_dims_k2_k5"] = [Iind.rel_dim(k) for k in range(2, 6)]
    out["ind_rel3_basis"] = [[poly_str(c) for c in r] for r in Iind.rel_basis(3)]
    out["ind_coset_dims_m3_m6"] = [R3.hilbert(m) - Iind.ideal_dim(m)
                                   for m in range(3, 7)]
    out["ind_coset_reps_m4"] = [mono_str(t) for t in coset_reps(R3, Iind, 4)]
    out["ind_coset_reps_m5"] = [mono_str(t) for t in coset_reps(R3, Iind, 5)]
    out["ind_memb_yz2"] = Iind.membership({(0, 1, 2): R3.K.of(1)}) is not None
    out["ind_memb_xz2"] = Iind.membership({(1, 0, 2): R3.K.of(1)}) is not None
    out["ind_split_degrees"] = syzygy_mingens_2var(
        [4, 2, 2],
        [{(4, 0): 1}, {(1, 1): 1}, {(0, 2): 1}])
    out["xy_split_degrees"] = syzygy_mingens_2var([1, 1], [{(1, 0): 1}, {(0, 1): 1}])
    out["x2y2_split_degrees"] = syzygy_mingens_2var([2, 2], [{(2, 0): 1}, {(0, 2): 1}])

    r_sigma = [{}, {(0, 1, 0): R3.K.of(1)}, {(1, 0, 0): R3.K.of(-1)}]
    out["ind_forcing_yz2"] = forcing_zero(R3, Iind, [(1, (0, 1, 2))], r_sigma, 3)
    out["ind_forcing_xz2"] = forcing_zero(R3, Iind, [(1, (1, 0, 2))], r_sigma, 3)
    out["ind_forcing_m4"] = {
        mono_str(t): forcing_zero(R3, Iind, [(1, t)], r_sigma, 3)
        for t in coset_reps(R3, Iind, 4)}

    # ---- (x^3, y^3, z^2) on the Fermat quartic ----
    I334 = Ideal(R4, gens([(1, (3, 0, 0))], [(1, (0, 3, 0))], [(1, (0, 0, 2))]))
    out["q334_primary_witness"] = I334.primary_witness()
    out["q334_rel_dims_k3_k5"] = [I334.rel_dim(k) for k in range(3, 6)]
    out["q334_rel4_basis"] = [[poly_str(c) for c in r] for r in I334.rel_basis(4)]

    # ---- cross-quotient example ----
    # cross((x,y,z), (y^2,-x^2,0)) = z * (x^2,y^2,z^2)
    out["cross_quotient_example"] = "z"

    # ---- Cech truncation dims ----
    cech = {}
    for name, ring in (("3", R3), ("4", R4), ("5", R5)):
        per = {}
        for a in range(-3, ring.delta + 1):
            target = ring.hilbert(ring.delta - 3 - a)
            dims = []
            stab = None
            for N in range(1, 2 * (ring.delta + abs(a) + 1) + 1):
                d = cech_dim(ring, a, N)
                dims.append(d)
                if stab is None and d == target and len(dims) >= 2 and dims[-2] == d:
                    stab = N
            per[str(a)] = {"target": target, "stab_dim": dims[-1]}
            assert dims[-1] == target == dims[-2], (name, a, dims, target)
        cech[name] = per
    out["cech"] = cech

    # ---- Hasse invariants for p < 50 ----
    hasse = {}
    for p in (2, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        K = Field(p)
        F = parse_terms(K, FERMAT3)
        Fq = poly_pow(K, F, p - 1)
        coeff = Fq.get((p - 1, p - 1, p - 1), 0)
        hasse[str(p)] = int(coeff)
    out["hasse_coeff_mod_p"] = hasse

    # ---- Frobenius witnesses ----
    def frob_first_q(p, gens_t, f0_t, qs):
        Rp = Ring(p, FERMAT3)
        f0 = parse_terms(Rp.K, f0_t)
        for q in qs:
            bracket = Ideal(Rp, [[(c, tuple(e * q for e in mm)) for c, mm in g]
                                 for g in gens_t])
            fq = poly_pow(Rp.K, f0, q)
            if bracket.membership(fq) is not None:
                return q
        return None

    out["frob_char2_xy_z2"] = frob_first_q(2, gens([(1, X)], [(1, Y)]),
                                           [(1, (0, 0, 2))], [2, 4])
    out["frob_char7_xy_z2_q7_q49"] = frob_first_q(7, gens([(1, X)], [(1, Y)]),
                                                  [(1, (0, 0, 2))], [7, 49])
    out["frob_char5_sq_xyz"] = frob_first_q(
        5, gens([(1, (2, 0, 0))], [(1, (0, 2, 0))], [(1, (0, 0, 2))]),
        [(1, (1, 1, 1))], [5, 25])
    out["frob_char2_sq_xyz"] = frob_first_q(
        2, gens([(1, (2, 0, 0))], [(1, (0, 2, 0))], [(1, (0, 0, 2))]),
        [(1, (1, 1, 1))], [2, 4])

    def tight_pass(p, gens_t, f0_t, c_t, qs):
        Rp = Ring(p, FERMAT3)
        f0 = parse_terms(Rp.K, f0_t)
        c = parse_terms(Rp.K, c_t)
        res = {}
        for q in qs:
            bracket = Ideal(Rp, [[(cc, tuple(e * q for e in mm)) for cc, mm in g]
                                 for g in gens_t])
            lhs = poly_mul(Rp.K, c, poly_pow(Rp.K, f0, q))
            res[str(q)] = bracket.membership(lhs) is not None
        return res

    out["tight_char7_xy_z2_c_z"] = tight_pass(7, gens([(1, X)], [(1, Y)]),
                                              [(1, (0, 0, 2))], [(1, Z)], [7, 49])
    out["tight_char7_sq_xyz_c_z"] = tight_pass(
        7, gens([(1, (2, 0, 0))], [(1, (0, 2, 0))], [(1, (0, 0, 2))]),
        [(1, (1, 1, 1))], [(1, Z)], [7])

    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
