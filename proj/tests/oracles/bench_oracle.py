#!/usr/bin/env python3
"""Independent numpy oracle for the frozen constants used in the C++ tests.

Builds every state and operator from ket-bra sums written out by hand (no
Kronecker helper shared with the library) and prints the values that the
unit and acceptance tests assert. Run: python3 tests/oracles/bench_oracle.py
"""
import itertools
import math

import numpy as np

a, b = np.array([1, 0], complex), np.array([0, 1], complex)
V, H = a, b


def ket4(p1, s1, p2, s2):
    return np.einsum("i,j,k,l->ijkl", p1, s1, p2, s2).reshape(16)


def outer(x, y):
    return np.outer(x, y.conj())


def op4(o_path1, o_pol1, o_path2, o_pol2):
    return np.einsum("ai,bj,ck,dl->abcdijkl", o_path1, o_pol1, o_path2, o_pol2).reshape(16, 16)


I2 = np.eye(2, dtype=complex)


def sigma_full(phase, sign):
    # sign=+1: e^{+i x}|2nd)(1st| + e^{-i x}|1st)(2nd|
    return sign_phase(phase, sign)


def sign_phase(x, s):
    return np.exp(1j * s * x) * outer(b, a) + np.exp(-1j * s * x) * outer(a, b)


def proj(x, s, plus):
    v = (a + (1 if plus else -1) * np.exp(1j * s * x) * b) / math.sqrt(2)
    return outer(v, v)


def psi0(A1, A2):
    return A1 * A2 / math.sqrt(2) * (ket4(a, V, a, V) - ket4(b, H, b, H))


def psi_pre(A1, A2, delta):
    return A1 * A2 / math.sqrt(2) * (ket4(a, V, a, V) - np.exp(1j * delta) * ket4(b, H, b, H))


def corr_numeric(t1, p1, t2, p2, A1, A2):
    O = op4(sign_phase(p1, +1), sign_phase(t1, +1), sign_phase(p2, -1), sign_phase(t2, -1))
    s = psi0(A1, A2)
    tot = abs(A1) ** 2 + abs(A2) ** 2
    return (s.conj() @ O @ s).real / tot ** 2


def intensity_pair(t1, p1, t2, p2):
    return op4(proj(p1, +1, True), proj(t1, +1, True), proj(p2, -1, True), proj(t2, -1, True))


def main():
    # kappa for C_numeric = kappa * cos(delta)
    for A1, A2 in [(1, 1), (1, math.sqrt(3)), (0.7, 1.9)]:
        grid = np.linspace(0, 2 * math.pi, 64, endpoint=False)
        vals = np.array([corr_numeric(d, 0, 0, 0, A1, A2) for d in grid])
        kappa = np.linalg.lstsq(np.cos(grid)[:, None], vals, rcond=None)[0][0]
        resid = np.max(np.abs(vals - kappa * np.cos(grid)))
        i1, i2 = A1 ** 2, A2 ** 2
        print(f"kappa(I1={i1:.4g},I2={i2:.4g}) = {kappa:.17g} resid={resid:.3g} "
              f"(-I1 I2/(I1+I2)^2 = {-i1 * i2 / (i1 + i2) ** 2:.17g})")

    # signed 16-term g2 sum at equal intensities
    for delta in [0.0, 0.3, 1.0, 2.5]:
        tot = 0.0
        for k, l, m, n in itertools.product((0, 1), repeat=4):
            g2 = 1 - 0.5 * math.cos(delta + (k - m) * math.pi + (l - n) * math.pi)
            tot += (-1) ** (k + l + m + n) * g2
        print(f"signed g2 sum delta={delta}: {tot:.17g}  ratio to cos: {tot / math.cos(delta):.17g}")

    # numeric intensity brackets and the transfer chain at a random setting
    rng = np.random.default_rng(7)
    t1, p1, t2, p2 = rng.uniform(-math.pi, math.pi, 4)
    delta = t1 + p1 - t2 - p2
    s0 = psi0(1, 1)
    v1 = (s0.conj() @ intensity_pair(t1, p1, t2, p2) @ s0).real
    pre = psi_pre(1, 1, delta)
    U = (outer(a, a) - outer(b, b) + outer(a, b) + outer(b, a)) / math.sqrt(2)
    post = op4(U, I2, U, I2) @ pre
    Pa = outer(a, a)
    v2 = (post.conj() @ op4(Pa, proj(0, 1, True), Pa, proj(0, -1, True)) @ post).real
    v3 = (pre.conj() @ intensity_pair(0, 0, 0, 0) @ pre).real
    print(f"transfer chain: {v1:.17g} {v2:.17g} {v3:.17g}; (1-cos)/16 = {(1 - math.cos(delta)) / 16:.17g}")
    signed = sum((-1) ** (k + l + m + n) *
                 (s0.conj() @ intensity_pair(t1 + k * math.pi, p1 + l * math.pi,
                                             t2 + m * math.pi, p2 + n * math.pi) @ s0).real
                 for k, l, m, n in itertools.product((0, 1), repeat=4))
    print(f"signed numeric bracket sum = {signed:.17g}; -cos(delta) = {-math.cos(delta):.17g}")

    # frozen values at one explicit setting with complex amplitudes
    t1, t2, p1, p2 = 0.3, -0.2, 1.1, 0.4
    A1, A2 = 0.8 * np.exp(0.3j), 1.7 * np.exp(-1.1j)
    delta = t1 + p1 - t2 - p2
    tot2 = (abs(A1) ** 2 + abs(A2) ** 2) ** 2
    print(f"frozen: delta = {delta:.17g}")
    print(f"frozen: C_numeric = {corr_numeric(t1, p1, t2, p2, A1, A2):.17g}")
    s0 = psi0(A1, A2)
    term = (s0.conj() @ intensity_pair(t1 + math.pi, p1, t2, p2 + math.pi) @ s0).real / tot2
    print(f"frozen: intensity term (1,0,0,1) numeric = {term:.17g}")
    pre = psi_pre(A1, A2, delta)
    post = op4(U, I2, U, I2) @ pre
    v1 = (s0.conj() @ intensity_pair(t1, p1, t2, p2) @ s0).real
    v2 = (post.conj() @ op4(Pa, proj(0, 1, True), Pa, proj(0, -1, True)) @ post).real
    v3 = (pre.conj() @ intensity_pair(0, 0, 0, 0) @ pre).real
    print(f"frozen: brackets = {v1:.17g} {v2:.17g} {v3:.17g}")
    for i in range(16):
        if abs(post[i]) > 1e-15:
            print(f"frozen: post[{i}] = {post[i].real:.17g} {post[i].imag:.17g}")

    # aa branch and P45 law
    for delta in [0.0, math.pi / 2, math.pi, 1.234]:
        post = op4(U, I2, U, I2) @ psi_pre(1, 1, delta)
        aa = post.reshape(2, 2, 2, 2)[0, :, 0, :].reshape(4)
        weight = np.vdot(aa, aa).real / np.vdot(post, post).real
        paired = aa / abs(aa[0])  # VV coefficient of unit modulus
        pp = np.kron((V + H) / math.sqrt(2), (V + H) / math.sqrt(2))
        p45 = abs(np.vdot(pp, paired)) ** 2
        unit = aa / np.linalg.norm(aa)
        print(f"delta={delta:.4f}: aa weight={weight:.17g} p45={p45:.17g} "
              f"(1-cos)/2={(1 - math.cos(delta)) / 2:.17g} unit-norm p45={abs(np.vdot(pp, unit)) ** 2:.17g}")

    # CHSH-type functionals
    cb = lambda t, p: math.cos(t + p)
    S = lambda t, tp, p, pp_: cb(t, p) + cb(t, pp_) - cb(tp, p) + cb(tp, pp_)
    print(f"S(0,pi/2,pi/4,-pi/4) = {S(0, math.pi / 2, math.pi / 4, -math.pi / 4):.17g}")
    print(f"S(0,pi/2,-pi/4,pi/4) = {S(0, math.pi / 2, -math.pi / 4, math.pi / 4):.17g}")
    print(f"S(0,0,0,0) = {S(0, 0, 0, 0):.17g}")
    g = np.linspace(0, 2 * math.pi, 64, endpoint=False)
    T, TP, P, PP = np.meshgrid(g, g, g, g, indexing="ij", sparse=True)
    grid_s = np.cos(T + P) + np.cos(T + PP) - np.cos(TP + P) + np.cos(TP + PP)
    print(f"grid max |S| (64^4) = {np.max(np.abs(grid_s)):.17g}  2sqrt2 = {2 * math.sqrt(2):.17g}")


if __name__ == "__main__":
    main()
