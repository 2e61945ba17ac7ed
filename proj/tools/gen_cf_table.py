#!/usr/bin/env python3
"""Generate include/fracquad/detail/cf_table.hpp.

Caratheodory-Fejer rational approximation of exp(x) on (-inf, 0], following
the classic cf.m procedure (Chebyshev expansion of exp(9(t-1)/(t+1)), Hankel
SVD, finite Blaschke product), carried out in extended precision with mpmath
so that the double-precision table is not polluted by round-off for the
higher degrees.

Usage: python3 tools/gen_cf_table.py [min_N] [max_N] > include/fracquad/detail/cf_table.hpp
"""
import sys

import mpmath as mp
import numpy as np

mp.mp.dps = 60

K = 75      # number of Chebyshev coefficients
NF = 1024   # points on the unit circle
SCALE = 9   # transplantation scale


def chebyshev_data():
    w = [mp.expjpi(mp.mpf(2 * j) / NF) for j in range(NF)]
    t = [mp.re(x) for x in w]
    F = []
    for x in t:
        den = x + 1
        F.append(mp.mpf(0) if abs(den) < mp.mpf(10) ** (-40) else mp.exp(SCALE * (x - 1) / den))
    c = []
    for k in range(K + 1):
        s = mp.fsum(F[j] * mp.cospi(mp.mpf(2 * j * k) / NF) for j in range(NF))
        c.append(s / NF)
    return w, c


def polyval(coeffs_high_first, z):
    acc = mp.mpc(0)
    for a in coeffs_high_first:
        acc = acc * z + a
    return acc


def poly_from_roots(roots):
    p = [mp.mpc(1)]
    for r in roots:
        q = p + [mp.mpc(0)]
        for i in range(1, len(q)):
            q[i] -= r * p[i - 1]
        p = q
    return p


def main():
    nmin = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    nmax = int(sys.argv[2]) if len(sys.argv) > 2 else 16

    w, c = chebyshev_data()
    f = [polyval(list(reversed(c)), x) for x in w]

    H = mp.matrix(K, K)
    for i in range(K):
        for j in range(K):
            H[i, j] = c[1 + i + j] if 1 + i + j <= K else mp.mpf(0)
    evals, Q = mp.eigsy(H)
    order = sorted(range(K), key=lambda i: -abs(evals[i]))

    out = []
    for n in range(nmin, nmax + 1):
        idx = order[n]
        sigma = abs(evals[idx])
        sgn = 1 if evals[idx] > 0 else -1
        q = [Q[i, idx] for i in range(K)]
        u = list(reversed(q))
        v = [sgn * x for x in q]

        b = []
        for x in w:
            xc = mp.conj(x)
            b.append(polyval(list(reversed(u)), xc) / polyval(list(reversed(v)), xc))
        rt = [f[j] - sigma * w[j] ** K * b[j] for j in range(NF)]

        # roots of v (highest power first); start from numpy, polish with Newton
        vf = np.array([float(x) for x in v])
        guesses = np.roots(vf)
        guesses = guesses[np.abs(guesses) > 1]
        dv = [v[i] * (K - 1 - i) for i in range(K - 1)]
        qk = []
        for g in guesses:
            z = mp.mpc(g.real, g.imag)
            for _ in range(100):
                dz = polyval(v, z) / polyval(dv, z)
                z -= dz
                if abs(dz) < mp.mpf(10) ** (-50) * abs(z):
                    break
            qk.append(z)
        assert len(qk) == n, (n, len(qk))

        qc = poly_from_roots(qk)
        pt = [rt[j] * polyval(qc, w[j]) for j in range(NF)]
        ptc = []
        for k in range(n + 1):
            s = mp.fsum(pt[j] * mp.conj(w[j]) ** k for j in range(NF))
            ptc.append(mp.re(s) / NF)
        ptc = list(reversed(ptc))

        poles, residues = [], []
        for k, z in enumerate(qk):
            others = poly_from_roots([qq for i, qq in enumerate(qk) if i != k])
            ck = polyval(ptc, z) / polyval(others, z)
            zk = SCALE * (z - 1) ** 2 / (z + 1) ** 2
            poles.append(zk)
            residues.append(4 * ck * zk / (z ** 2 - 1))

        # Symmetrize: conjugate pairs exact, the real pole (odd N) exactly real.
        pairs = sorted(range(n), key=lambda i: (float(mp.re(poles[i])), float(mp.im(poles[i]))))
        pos = [i for i in pairs if mp.im(poles[i]) > mp.mpf(10) ** (-30)]
        real = [i for i in pairs if abs(mp.im(poles[i])) <= mp.mpf(10) ** (-30)]
        entries = []
        for i in real:
            entries.append((mp.re(poles[i]), mp.mpf(0), mp.re(residues[i]), mp.mpf(0)))
        for i in pos:
            entries.append((mp.re(poles[i]), mp.im(poles[i]), mp.re(residues[i]), mp.im(residues[i])))
            entries.append((mp.re(poles[i]), -mp.im(poles[i]), mp.re(residues[i]), -mp.im(residues[i])))
        assert len(entries) == n
        out.append((n, sigma, entries))
        print(f"N={n} sigma={mp.nstr(sigma, 5)}", file=sys.stderr)

    emit(out)


def emit(out):
    fmt = lambda x: mp.nstr(x, 20, min_fixed=0, max_fixed=0, strip_zeros=False)
    print("// Generated by tools/gen_cf_table.py. Do not edit by hand.")
    print("//")
    print("// Caratheodory-Fejer rational approximations r(x) = sum_k res_k / (x - pole_k)")
    print("// of exp(x) on (-inf, 0]. Each entry is {Re pole, Im pole, Re res, Im res}.")
    print("// Real poles come first, then conjugate pairs (+Im, -Im).")
    print("#pragma once")
    print()
    print("#include <array>")
    print("#include <span>")
    print()
    print("namespace fracquad::detail {")
    print()
    print("struct CfEntry {")
    print("  double pole_re, pole_im, res_re, res_im;")
    print("};")
    print()
    for n, sigma, entries in out:
        print(f"// N = {n}, Hankel singular value {mp.nstr(sigma, 6)}")
        print(f"inline constexpr std::array<CfEntry, {n}> kCf{n}{{{{")
        for e in entries:
            print("    {" + ", ".join(fmt(x) for x in e) + "},")
        print("}};")
        print()
    lo, hi = out[0][0], out[-1][0]
    print(f"inline constexpr int kCfMinDegree = {lo};")
    print(f"inline constexpr int kCfMaxDegree = {hi};")
    print()
    print("inline std::span<const CfEntry> cf_table(int degree) {")
    print("  switch (degree) {")
    for n, _, _ in out:
        print(f"    case {n}: return kCf{n};")
    print("    default: return {};")
    print("  }")
    print("}")
    print()
    print("}  // namespace fracquad::detail")


if __name__ == "__main__":
    main()
