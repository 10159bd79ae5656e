#!/usr/bin/env python3
"""Generate zero-ordinate tables for the Riemann zeta function and for a few
Dirichlet L-functions (moduli 3, 4 and 10).

The output files live in data/zeros/ and use a plain text format:
  - '#' starts a comment line,
  - one ordinate per line, ascending,
  - L-function files carry a '# L q=<q> chi=<index>' header line.

For modulus 10 every character is induced by a primitive character mod 5;
the nontrivial zeros of the induced L-function coincide with those of the
primitive one (the induced Euler factor 1 - chi(2) 2^{-s} has its zeros on
Re s = 0), so the primitive L-function is what gets scanned here.

Characters are indexed against the generator tables used by the library:
  q=3:  chi_1(2) = -1
  q=4:  chi_1(3) = -1
  q=10: chi_j(a) = i^(j*e) where a = 2^e (mod 5)

L-zeros are located through the completed function Lambda(s, chi) =
(q/pi)^((s+a)/2) Gamma((s+a)/2) L(s, chi): dividing by the square root of
the root number epsilon = tau(chi) / (i^a sqrt(q)) makes it real on the
critical line, so zeros are bracketed by sign changes on a grid and then
bisected -- no open-ended root iteration that could wander off the line.
"""

import os
import sys
import time

import mpmath as mp

OUT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                   "data", "zeros")


def write_table(name, header_lines, values):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        for h in header_lines:
            f.write("# %s\n" % h)
        for v in values:
            f.write(mp.nstr(v, 15, strip_zeros=False) + "\n")
    print("wrote %s (%d values)" % (path, len(values)), flush=True)


def gen_zeta_zeros(count):
    mp.mp.dps = 20
    vals = []
    t0 = time.time()
    for k in range(1, count + 1):
        vals.append(mp.zetazero(k).imag)
        if k % 100 == 0:
            print("  zeta zero %d / %d  (%.0fs)" % (k, count, time.time() - t0),
                  flush=True)
    write_table("zeta_zeros_2000.txt",
                ["imaginary parts of the first %d nontrivial zeros of zeta(s)"
                 % count],
                vals)


def character_table(q, j):
    """Return dict a -> chi_j(a) for the character indexing described above."""
    chi = {}
    if q == 3:
        chi = {1: mp.mpc(1), 2: mp.mpc(-1) ** j}
    elif q == 4:
        chi = {1: mp.mpc(1), 3: mp.mpc(-1) ** j}
    elif q == 5:
        # generator 2: 2^0=1, 2^1=2, 2^2=4, 2^3=3
        dlog = {1: 0, 2: 1, 4: 2, 3: 3}
        for a, e in dlog.items():
            chi[a] = mp.expjpi(mp.mpf(2 * j * e) / 4)  # i^(j*e)
    else:
        raise ValueError(q)
    return chi


def L_func(q, chi):
    qm = mp.mpf(q)

    def L(s):
        acc = mp.mpc(0)
        for a, c in chi.items():
            acc += c * mp.zeta(s, mp.mpf(a) / qm)
        return qm ** (-s) * acc

    return L


def hardy_z(q, chi):
    """Real-valued Z(t) proportional to L(1/2+it, chi) on the critical line."""
    parity = 1 if abs(chi[q - 1] + 1) < 1e-12 else 0  # chi(-1) = -1: odd
    tau = mp.fsum([c * mp.expjpi(mp.mpf(2 * a) / q) for a, c in chi.items()])
    eps = tau / (mp.mpc(0, 1) ** parity * mp.sqrt(q))
    if abs(abs(eps) - 1) > 1e-10:
        raise RuntimeError("root number is not unimodular: %s" % eps)
    rot = 1 / mp.sqrt(eps)
    L = L_func(q, chi)
    qpi = mp.mpf(q) / mp.pi

    def Z(t):
        s = mp.mpc(0.5, t)
        lam = qpi ** ((s + parity) / 2) * mp.gamma((s + parity) / 2) * L(s)
        z = rot * lam
        if abs(z.imag) > 1e-6 * abs(z) + mp.mpf(10) ** (-mp.mp.dps + 3):
            raise RuntimeError("Z(t) is not real at t=%s: %s" % (t, z))
        return z.real

    return Z


def bisect_zero(Z, a, b, fa, fb):
    """Plain bisection on a sign change: immune to wandering."""
    for _ in range(60):
        m = (a + b) / 2
        fm = Z(m)
        if fm == 0:
            return m
        if (fa < 0) != (fm < 0):
            b, fb = m, fm
        else:
            a, fa = m, fm
        if b - a < mp.mpf(10) ** (-12):
            break
    return (a + b) / 2


def scan_zeros(Z, t_lo, t_hi, step, need):
    """Bracket sign changes of Z on a grid, bisect each; stop at `need`."""
    roots = []
    t = mp.mpf(t_lo)
    ft = Z(t)
    while t < t_hi and len(roots) < need:
        t2 = t + step
        ft2 = Z(t2)
        if ft2 == 0:
            roots.append(t2)
        elif (ft < 0) != (ft2 < 0):
            roots.append(bisect_zero(Z, t, t2, ft, ft2))
        t, ft = t2, ft2
    if len(roots) < need:
        raise RuntimeError("found only %d of %d zeros" % (len(roots), need))
    # gap sanity: flag suspicious large gaps that may hide a missed zero
    for i in range(3, len(roots)):
        gap = roots[i] - roots[i - 1]
        local = (roots[i] - roots[i - 3]) / 3
        if gap > 2.5 * local:
            print("  WARNING: large gap %.3f after t=%.3f" %
                  (gap, roots[i - 1]), flush=True)
    return roots[:need]


def gen_l_zeros():
    mp.mp.dps = 15
    need = 100

    t0 = time.time()
    # q=3, real odd character
    z = scan_zeros(hardy_z(3, character_table(3, 1)), 0.5, 260.0, 0.08, need)
    write_table("L_q3_chi1.txt", ["L q=3 chi=1"], z)
    print("  q=3 done (%.0fs)" % (time.time() - t0), flush=True)

    # q=4, real odd character
    z = scan_zeros(hardy_z(4, character_table(4, 1)), 0.5, 250.0, 0.08, need)
    write_table("L_q4_chi1.txt", ["L q=4 chi=1"], z)
    print("  q=4 done (%.0fs)" % (time.time() - t0), flush=True)

    # q=10: induced by primitive characters mod 5 (same character index)
    zpos = {}
    for j in (1, 2, 3):
        z = scan_zeros(hardy_z(5, character_table(5, j)), 0.3, 240.0, 0.08,
                       need)
        zpos[j] = z
        write_table("L_q10_chi%d.txt" % j, ["L q=10 chi=%d" % j], z)
        print("  q=10 chi=%d done (%.0fs)" % (j, time.time() - t0), flush=True)
    # L(conj(s), conj(chi)) = conj(L(s, chi)), so the negative-ordinate zeros
    # of chi_j are the mirrored positive-ordinate zeros of its conjugate
    # character chi_{4-j}; stored as positive magnitudes.
    write_table("L_q10_chi1_neg.txt",
                ["L q=10 chi=1", "negative-ordinate zeros, stored as magnitudes"],
                zpos[3])
    write_table("L_q10_chi3_neg.txt",
                ["L q=10 chi=3", "negative-ordinate zeros, stored as magnitudes"],
                zpos[1])


def main():
    os.makedirs(OUT, exist_ok=True)
    which = sys.argv[1] if len(sys.argv) > 1 else "all"
    if which in ("all", "l"):
        gen_l_zeros()
    if which in ("all", "zeta"):
        gen_zeta_zeros(2000)


if __name__ == "__main__":
    main()
