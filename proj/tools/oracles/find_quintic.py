"""Search for a quintic F = x^5+y^5+z^5+xz^4+... with Rel_7((x^4,y^4,z^4)) = 0.

The Fermat quintic itself admits the primary degree-5 relation (x,y,z) for
(x^4,y^4,z^4), so extra terms are required. Candidates add interior monomials
(all exponents <= 3) to x^5+y^5+z^5+xz^4; each candidate is checked for
  * Rel_7 = 0 over Q (hence Rel_k = 0 for all k <= 7),
  * Rel_7 = 0 over F_7 and F_13,
  * smoothness certificate (full Jacobian degree piece) over Q, F_7, F_13.
Prints the first winner with its frozen batch data.
"""

import itertools
import json
import sys

from polyring import (Ring, Ideal, Field, parse_terms, poly_mul, monomials,
                      rank_of_cols, GREVLEX_KEY)

BASE = [(1, (5, 0, 0)), (1, (0, 5, 0)), (1, (0, 0, 5)), (1, (1, 0, 4))]
INTERIOR = [m for m in monomials(5) if max(m) <= 3]
GENS4 = [[(1, (4, 0, 0))], [(1, (0, 4, 0))], [(1, (0, 0, 4))]]


def smooth_N(p, Fterms, delta=5):
    K = Field(p)
    F = parse_terms(K, Fterms)
    gens_all = [F]
    degsG = [delta]
    for vi in range(3):
        dF = {}
        for mm, c in F.items():
            if mm[vi] > 0:
                m2 = list(mm)
                m2[vi] -= 1
                d = K.mul(c, K.of(mm[vi]))
                if d != 0:
                    dF[tuple(m2)] = d
        if dF:
            gens_all.append(dF)
            degsG.append(delta - 1)
    for N in range(0, 3 * delta + 1):
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
        if len(target) and cols and rank_of_cols(K, cols) == len(target):
            return N
    return None


def rel7_zero(p, Fterms):
    R = Ring(p, Fterms)
    I = Ideal(R, GENS4)
    return I.rel_dim(7) == 0


def mono_str(m, names="xyz"):
    out = []
    for e, v in zip(m, names):
        if e == 1:
            out.append(v)
        elif e > 1:
            out.append(f"{v}^{e}")
    return "".join(out) or "1"


def candidates():
    for t in INTERIOR:
        for c in (1, 2):
            yield [(c, t)]
    for t1, t2 in itertools.combinations(INTERIOR, 2):
        yield [(1, t1), (1, t2)]


def main():
    for extra in candidates():
        Fterms = BASE + extra
        if not rel7_zero(0, Fterms):
            continue
        if not rel7_zero(7, Fterms) or not rel7_zero(13, Fterms):
            continue
        n0 = smooth_N(0, Fterms)
        n7 = smooth_N(7, Fterms)
        n13 = smooth_N(13, Fterms)
        if n0 is None or n7 is None or n13 is None:
            continue
        R = Ring(0, Fterms)
        I = Ideal(R, GENS4)
        out = {
            "extra_terms": [[c, list(t)] for c, t in extra],
            "F_str": " + ".join(f"{c}*{mono_str(t)}" for c, t in Fterms),
            "smooth_N": {"0": n0, "7": n7, "13": n13},
            "rel_dims_k4_k8": [I.rel_dim(k) for k in range(4, 9)],
            "witness": I.primary_witness(),
            "coset_dim_m5": R.hilbert(5) - I.ideal_dim(5),
            "coset_dim_m6": R.hilbert(6) - I.ideal_dim(6),
            "coset_dim_m7": R.hilbert(7) - I.ideal_dim(7),
        }
        json.dump(out, sys.stdout, indent=1)
        print()
        return
    print("NO CANDIDATE FOUND", file=sys.stderr)
    sys.exit(1)


if __name__ == "__main__":
    main()
