#!/usr/bin/env python3
"""Regenerates src/filter_tables.cpp.

Coefficients come from PyWavelets. The 62-tap discrete Meyer table shipped by
PyWavelets is a truncated FIR approximation whose even-shift orthonormality
only holds to ~2e-3, so it is replaced by the nearest (in the least-change
sense) filter that is exactly orthonormal with a zero at z = -1. The solve runs
in 60-digit arithmetic with Gauss-Newton on the factor q in g = (1 + z^-1) q.

Requires: pywt, mpmath.  Usage: tools/gen_filter_tables.py > src/filter_tables.cpp
"""
import sys

import mpmath as mp
import pywt

ORTHOGONAL = ["haar", "db2", "db4", "sym8", "coif3", "dmey"]
BIORTHOGONAL = ["bior3.3", "bior4.4", "bior6.8", "rbio3.3"]


def refine_orthonormal(g0):
    mp.mp.dps = 60
    g0 = [mp.mpf(repr(v)) for v in g0]
    n_taps = len(g0)
    n_q = n_taps - 1
    a = mp.matrix(n_taps, n_q)
    for n in range(n_q):
        a[n, n] = 1
        a[n + 1, n] = 1
    q = mp.lu_solve(a.T * a, a.T * mp.matrix(g0))
    q = [q[i] for i in range(n_q)]

    def expand(q):
        return [(q[n] if n < n_q else 0) + (q[n - 1] if n >= 1 else 0)
                for n in range(n_taps)]

    def residual(g):
        return [mp.fsum(g[n] * g[n + 2 * k] for n in range(n_taps - 2 * k))
                - (1 if k == 0 else 0) for k in range(n_taps // 2)]

    def jacobian(g):
        j = mp.matrix(n_taps // 2, n_taps)
        for k in range(n_taps // 2):
            for n in range(n_taps - 2 * k):
                j[k, n] += g[n + 2 * k]
                j[k, n + 2 * k] += g[n]
        return j * a

    def worst(c):
        return max(abs(x) for x in c)

    for _ in range(100):
        g = expand(q)
        c = residual(g)
        err = worst(c)
        if err < mp.mpf("1e-50"):
            break
        j = jacobian(g)
        step = j.T * mp.lu_solve(j * j.T, mp.matrix(c))
        t = mp.mpf(1)
        while True:
            trial = [q[i] - t * step[i] for i in range(n_q)]
            if worst(residual(expand(trial))) < err or t < 1e-8:
                break
            t /= 2
        q = trial
    return [float(v) for v in expand(q)]


def ident(name):
    return "k" + "".join(p.capitalize() for p in name.replace(".", "_").split("_"))


def emit(out, name, values):
    out.write(f"constexpr double {name}[] = {{\n")
    for v in values:
        out.write(f"    {v!r},\n")
    out.write("};\n")


def main(out):
    out.write("// Generated by tools/gen_filter_tables.py. Do not edit.\n\n")
    out.write('#include "filter_tables.hpp"\n\nnamespace wavexfer::detail {\n\nnamespace {\n\n')
    rows = []
    for name in ORTHOGONAL:
        w = pywt.Wavelet(name)
        lo = list(w.dec_lo)
        if name == "dmey":
            lo = refine_orthonormal(lo)
            taps = len(lo)
            hi = [-((-1) ** n) * lo[taps - 1 - n] for n in range(taps)]
        else:
            hi = list(w.dec_hi)
        base = ident(name)
        out.write(f"// {name}\n")
        emit(out, base + "DecLo", lo)
        emit(out, base + "DecHi", hi)
        out.write("\n")
        rows.append((name, True, base))
    for name in BIORTHOGONAL:
        w = pywt.Wavelet(name)
        base = ident(name)
        out.write(f"// {name}\n")
        emit(out, base + "DecLo", w.dec_lo)
        emit(out, base + "DecHi", w.dec_hi)
        emit(out, base + "RecLo", w.rec_lo)
        emit(out, base + "RecHi", w.rec_hi)
        out.write("\n")
        rows.append((name, False, base))
    out.write("}  // namespace\n\n")
    out.write("const std::array<RawFilterTable, kFamilyCount>& raw_filter_tables() {\n")
    out.write("  static const std::array<RawFilterTable, kFamilyCount> tables{{\n")
    for name, ortho, base in rows:
        enum = name.replace(".", "_")
        if ortho:
            out.write(f"      {{Family::{enum}, true, {base}DecLo, {base}DecHi, {{}}, {{}}}},\n")
        else:
            out.write(f"      {{Family::{enum}, false, {base}DecLo, {base}DecHi, {base}RecLo, {base}RecHi}},\n")
    out.write("  }};\n  return tables;\n}\n\n}  // namespace wavexfer::detail\n")


if __name__ == "__main__":
    main(sys.stdout)
