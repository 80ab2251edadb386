#!/usr/bin/env python3
# Copyright 2026 The vgamma Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the frozen reference headers in tests/oracle_data/.

All values are computed independently of the C++ library: mpmath at 60-100
decimal digits for function values and dense linear algebra, sympy for the
exact (rational) Jordan form of the defective example matrix and for symbolic
derivatives. Matrix inputs that the C++ side builds in double precision
(gcdmat/minij scaled by 1/n) are reproduced here with the same IEEE double
operations before being promoted, so the reference applies to the exact
matrix the library sees.

Randomized suites derive their instances from the 64-bit LCG in
tests/support.hpp, re-implemented here bit-for-bit, so only oracle outputs
need freezing.

Run from the repository root:  python3 tests/oracles/generate.py
"""

import math
import os
import random

import mpmath as mp
import sympy as sp

OUT = os.path.join(os.path.dirname(__file__), "..", "oracle_data")
mp.mp.dps = 60

MASK = (1 << 64) - 1


class Lcg:
    """Mirror of testsup::Lcg."""

    def __init__(self, seed=0x123456789ABCDEF):
        self.state = seed

    def next_u64(self):
        self.state = (self.state * 6364136223846793005 + 1442695040888963407) & MASK
        return self.state

    def next_double(self):
        return float(self.next_u64() >> 11) * 2.0 ** -53


def hexf(x):
    x = float(x)
    if x == 0.0 and math.copysign(1.0, x) < 0:
        x = 0.0
    return float.hex(x)


def emit_header(path, name, body):
    guard = "VGAMMA_ORACLE_%s_HPP" % name.upper()
    with open(path, "w") as f:
        f.write("// Generated by tests/oracles/generate.py -- do not edit.\n")
        f.write("#ifndef %s\n#define %s\n\n" % (guard, guard))
        f.write(body)
        f.write("\n#endif\n")


def carray(name, values, per_line=4):
    lines = ["inline constexpr double %s[%d] = {" % (name, len(values))]
    row = []
    for i, v in enumerate(values):
        row.append(hexf(v))
        if len(row) == per_line or i == len(values) - 1:
            lines.append("    " + ", ".join(row) + ",")
            row = []
    lines.append("};")
    return "\n".join(lines) + "\n"


def flatten_cmatrix(m, rows, cols):
    out = []
    for i in range(rows):
        for j in range(cols):
            v = m[i, j]
            out.append(float(mp.re(v)))
            out.append(float(mp.im(v)))
    return out


def mat_gamma(a_mp):
    """Gamma of a small matrix through eigendecomposition at high precision."""
    e, v = mp.eig(a_mp)
    d = mp.diag([mp.gamma(x) for x in e])
    return v * d * v ** -1


# ---------------------------------------------------------------------------
# Scalar oracle


def scalar_header():
    body = ["namespace oracle {\n"]

    a = mp.mpf(7) / 2

    def ck(k):
        return (1 / mp.sqrt(2 * mp.pi)) * ((-1) ** (k - 1) / mp.factorial(k - 1)) * \
            (a - k) ** (k - mp.mpf(1) / 2) * mp.exp(a - k)

    def consts():
        vals = {}
        vals["kSqrtPi"] = mp.sqrt(mp.pi)
        vals["kEulerGamma"] = mp.euler
        vals["kGammaPrime2"] = mp.diff(mp.gamma, 2, 1)
        vals["kGammaPrime3_1"] = mp.diff(mp.gamma, mp.mpf("3.1"), 1)
        vals["kGammaPrime4_02"] = mp.diff(mp.gamma, mp.mpf("4.02"), 1)
        vals["kGammaNegHalf"] = mp.gamma(mp.mpf(-1) / 2)
        vals["kGammaNeg5Half"] = mp.gamma(mp.mpf(-5) / 2)
        vals["kGamma2_25"] = mp.gamma(mp.mpf("2.25"))
        vals["kGamma3_25"] = mp.gamma(mp.mpf("3.25"))
        vals["kKAt1A35"] = mp.sqrt(2 * mp.pi) * mp.mpf("3.5") ** mp.mpf("0.5") * mp.exp(mp.mpf("-3.5"))
        vals["kXi0At1A35"] = mp.sqrt(a * mp.e / mp.pi) / (mp.mpf("3.5") * (2 * mp.pi) ** (a + mp.mpf(1) / 2))
        vals["kXi1At1A35"] = mp.factorial(1) * mp.sqrt(a * mp.e / mp.pi) / (
            mp.mpf("3.5") ** 2 * (2 * mp.pi) ** (a + mp.mpf(1) / 2))
        vals["kOmega1"] = mp.mpf(3) / 4 + (mp.cosh(1) - 1) / 9
        alpha31 = mp.mpf("3.1")
        alpha29 = mp.mpf("2.9")
        vals["kOmega3_1"] = (2 * alpha31 + 1) / (alpha31 ** 2 * (alpha31 + 1) ** 2) + (mp.cosh(1) - 1) / (alpha31 + 2) ** 2
        vals["kOmega2_9"] = (2 * alpha29 + 1) / (alpha29 ** 2 * (alpha29 + 1) ** 2) + (mp.cosh(1) - 1) / (alpha29 + 2) ** 2
        # -d/dalpha of the lower incomplete gamma at alpha=1, by quadrature.
        vals["kNegIncGammaDeriv1"] = -mp.quad(lambda t: mp.exp(-t) * mp.log(t), [0, 1])
        return vals

    for k, v in consts().items():
        body.append("inline constexpr double %s = %s;\n" % (k, hexf(v)))

    g1i = mp.gamma(1 + 1j)
    body.append("inline constexpr double kGamma1PlusI[2] = {%s, %s};\n" % (hexf(mp.re(g1i)), hexf(mp.im(g1i))))
    g2i = mp.gamma(2 + 1j)
    body.append("inline constexpr double kGamma2PlusI[2] = {%s, %s};\n" % (hexf(mp.re(g2i)), hexf(mp.im(g2i))))
    pw = mp.exp((mp.mpf("1.5") + mp.mpf("0.5") * 1j) * mp.log(mp.mpf("2.5")))
    body.append("inline constexpr double kPow2_5[2] = {%s, %s};\n" % (hexf(mp.re(pw)), hexf(mp.im(pw))))

    # H-jet at z=5 and P-jet at z=1, both for a = 7/2 (b = 3, so k = 1..3).
    hj = []
    for j in range(4):
        if j == 0:
            v = 1 + mp.fsum([ck(k) / (5 - 1 + k) for k in range(1, 4)])
        else:
            v = mp.fsum([(-1) ** j * ck(k) / (5 - 1 + k) ** (j + 1) for k in range(1, 4)])
        hj.append(v)
    body.append(carray("kHJet5A35", [float(x) for x in hj]))

    pj = []
    z = mp.mpf(1)
    for j in range(4):
        if j == 0:
            v = mp.log(z - 1 + a) - (a - mp.mpf(1) / 2) / (z - 1 + a)
        else:
            v = (-1) ** (j - 1) / (j * (z - 1 + a) ** j) + (-1) ** (j - 1) * (a - mp.mpf(1) / 2) / (z - 1 + a) ** (j + 1)
        pj.append(v)
    body.append(carray("kPJet1A35", [float(x) for x in pj]))

    # K-jet at z=2 for a = 7/2 via symbolic differentiation.
    zs = sp.symbols("z")
    asym = sp.Rational(7, 2)
    K = sp.sqrt(2 * sp.pi) * (zs - 1 + asym) ** (zs - sp.Rational(1, 2)) * sp.exp(-(zs - 1 + asym))
    kj = []
    for k in range(4):
        expr = sp.diff(K, zs, k).subs(zs, 2) / sp.factorial(k)
        kj.append(float(sp.N(expr, 50)))
    body.append(carray("kKJet2A35", kj))

    # 200 random arguments with their Gamma jets (order 3). Kept clear of the
    # poles so every draw is a valid jet argument.
    rng = random.Random(20260810)
    zs_list = []
    while len(zs_list) < 200:
        re = rng.uniform(-2.39, 20.0)
        im = rng.uniform(-10.0, 10.0)
        if min(abs(complex(re, im) - complex(k, 0)) for k in range(-2, 1)) < 1e-3:
            continue
        zs_list.append((re, im))
    table = []
    for re, im in zs_list:
        z = mp.mpc(re, im)
        table.append(re)
        table.append(im)
        for j in range(4):
            v = mp.diff(mp.gamma, z, j) / mp.factorial(j)
            table.append(float(mp.re(v)))
            table.append(float(mp.im(v)))
    body.append("inline constexpr int kRandomZCount = 200;\n")
    body.append("// layout per entry: re, im, then (re, im) of Gamma^(j)(z)/j! for j = 0..3\n")
    body.append(carray("kRandomZJets", table, per_line=5))

    body.append("}  // namespace oracle\n")
    emit_header(os.path.join(OUT, "oracle_scalar.hpp"), "scalar", "".join(body))


# ---------------------------------------------------------------------------
# Matrix oracle


def frank(n):
    m = [[0.0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j >= i:
                m[i - 1][j - 1] = float(n - j + 1)
            elif j == i - 1:
                m[i - 1][j - 1] = float(n - j)
    return m


def gcdmat(n):
    return [[float(math.gcd(i, j)) / n for j in range(1, n + 1)] for i in range(1, n + 1)]


def minij(n):
    return [[float(min(i, j)) / n for j in range(1, n + 1)] for i in range(1, n + 1)]


def poisson(g):
    n = g * g
    m = [[0.0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 4.0
        r, c = divmod(i, g)
        if c > 0:
            m[i][i - 1] = -1.0
        if c < g - 1:
            m[i][i + 1] = -1.0
        if r > 0:
            m[i][i - g] = -1.0
        if r < g - 1:
            m[i][i + g] = -1.0
    return m


def matrix_header():
    body = ["namespace oracle {\n"]

    def emit_gamma_of(name, rows):
        n = len(rows)
        a_mp = mp.matrix([[mp.mpf(x) for x in row] for row in rows])
        g = mat_gamma(a_mp)
        body.append("inline constexpr int %sN = %d;\n" % (name, n))
        body.append(carray(name, flatten_cmatrix(g, n, n)))

    emit_gamma_of("kGammaFrank5", frank(5))
    emit_gamma_of("kGammaFrank7", frank(7))
    emit_gamma_of("kGammaGcd5", gcdmat(5))
    emit_gamma_of("kGammaMinij5", minij(5))
    emit_gamma_of("kGammaPoisson3", poisson(3))

    # Example 2 matrix: upper triangular, closed form with a divided
    # difference in the off-diagonal entry.
    eps = mp.mpf(2) ** -48
    g11 = mp.gamma(1)
    g22 = mp.gamma(1 + eps)
    dd = (g22 - g11) / eps
    body.append(carray("kGammaEx2", [float(g11), 0.0, float(dd), 0.0, 0.0, 0.0, float(g22), 0.0]))

    # Example 3: exact Jordan form of A0 (sympy, rational arithmetic), then
    # Gamma(sigma*A0) = P * [sum_k Gamma^(k)(sigma)/k! (sigma N)^k] * P^-1.
    a0 = sp.Matrix([[2, 2, 1, 0], [0, 1, 1, 1], [-1, -1, 0, 0], [1, 1, 1, 1]])
    p, jform = a0.jordan_form()
    assert jform == sp.Matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    p_mp = mp.matrix([[mp.mpf(sp.Rational(p[i, j]).p) / mp.mpf(sp.Rational(p[i, j]).q)
                        for j in range(4)] for i in range(4)])
    pinv = p_mp ** -1
    for tag, sigma in (("Half", mp.mpf("0.5")), ("1", mp.mpf(1)), ("2", mp.mpf(2))):
        jet = [mp.diff(mp.gamma, sigma, k) / mp.factorial(k) for k in range(4)]
        t = mp.zeros(4, 4)
        for i in range(4):
            for j in range(i, 4):
                t[i, j] = jet[j - i] * sigma ** (j - i)
        g = p_mp * t * pinv
        body.append(carray("kGammaEx3Sigma%s" % tag, flatten_cmatrix(g, 4, 4)))

    # A 2x2 far-left block for the reduction path: Gamma(lam I + Q) at
    # lam = -3.2 with a fixed small perturbation Q.
    lam_ar = mp.mpf("-3.2")
    q11 = mp.mpc("0.004", "0.002")
    q12 = mp.mpc("-0.006", "0")
    q21 = mp.mpc("0.003", "0")
    q22 = mp.mpc("0", "-0.005")
    pert = mp.matrix([[lam_ar + q11, q12], [q21, lam_ar + q22]])
    body.append(carray("kGammaArUpCase", flatten_cmatrix(mat_gamma(pert), 2, 2)))
    body.append("inline constexpr double kGammaArUpQ[8] = {%s, %s, %s, %s, %s, %s, %s, %s};\n" % (
        hexf(mp.re(q11)), hexf(mp.im(q11)), hexf(mp.re(q12)), hexf(mp.im(q12)),
        hexf(mp.re(q21)), hexf(mp.im(q21)), hexf(mp.re(q22)), hexf(mp.im(q22))))

    # Fixed well-conditioned complex 8x8 system with two right-hand sides.
    rng = random.Random(77)
    amat = [[complex(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(8)] for _ in range(8)]
    for i in range(8):
        amat[i][i] += 20
    bmat = [[complex(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(2)] for _ in range(8)]
    a_mp = mp.matrix([[mp.mpc(v) for v in row] for row in amat])
    b_mp = mp.matrix([[mp.mpc(v) for v in row] for row in bmat])
    x_mp = mp.lu_solve(a_mp, b_mp[:, 0])
    x2_mp = mp.lu_solve(a_mp, b_mp[:, 1])
    flat_a = []
    for row in amat:
        for v in row:
            flat_a.extend([v.real, v.imag])
    flat_b = []
    for row in bmat:
        for v in row:
            flat_b.extend([v.real, v.imag])
    flat_x = []
    for i in range(8):
        flat_x.extend([float(mp.re(x_mp[i])), float(mp.im(x_mp[i]))])
        flat_x.extend([float(mp.re(x2_mp[i])), float(mp.im(x2_mp[i]))])
    body.append(carray("kSolve8A", flat_a))
    body.append(carray("kSolve8B", flat_b))
    body.append("// layout: row-major 8x2, (re, im) per entry\n")
    body.append(carray("kSolve8X", flat_x))

    body.append("}  // namespace oracle\n")
    emit_header(os.path.join(OUT, "oracle_matrix.hpp"), "matrix", "".join(body))


# ---------------------------------------------------------------------------
# Perturbation-bound oracle (instances shared with the C++ tests via the LCG)


def perturb_instance(lcg):
    u_p = lcg.next_double()
    p = 2 if u_p < 0.5 else 3
    u_m = lcg.next_double()
    if u_m < 0.4:
        sizes = []
    elif p == 2:
        sizes = [2]
    else:
        sizes = [3] if u_m < 0.7 else [2, 1]
    re_base = 0.8 if not sizes else 1.15
    lam_re = re_base + 4.0 * lcg.next_double()
    lam_im = -1.0 + 2.0 * lcg.next_double()
    rmat = [[1e-6 + 1e-4 * lcg.next_double() for _ in range(p)] for _ in range(p)]
    qmat = [[0j] * p for _ in range(p)]
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    for i in range(p):
        for j in range(p):
            u = lcg.next_double()
            v = lcg.next_double()
            s1 = 1.0 if lcg.next_double() < 0.5 else -1.0
            s2 = 1.0 if lcg.next_double() < 0.5 else -1.0
            qmat[i][j] = rmat[i][j] * complex(s1 * u * inv_sqrt2, s2 * v * inv_sqrt2)
    return p, sizes, complex(lam_re, lam_im), rmat, qmat


def nilpotent(p, sizes):
    m = [[0.0] * p for _ in range(p)]
    off = 0
    for s in sizes:
        for i in range(s - 1):
            m[off + i][off + i + 1] = 1.0
        off += s
    return m


def norms_1_inf(g):
    p = g.rows
    col = max(mp.fsum([abs(g[i, j]) for i in range(p)]) for j in range(p))
    row = max(mp.fsum([abs(g[i, j]) for j in range(p)]) for i in range(p))
    return float(col), float(row)


def perturb_header():
    body = ["namespace oracle {\n"]
    lcg = Lcg()
    count = 1000
    norms = []
    first_dump = None
    for idx in range(count):
        p, sizes, lam, rmat, qmat = perturb_instance(lcg)
        if idx == 0:
            flat = [float(p), float(len(sizes))] + [float(s) for s in sizes]
            flat += [lam.real, lam.imag]
            for row in rmat:
                flat += row
            for row in qmat:
                for q in row:
                    flat += [q.real, q.imag]
            first_dump = flat
        m = nilpotent(p, sizes)
        center = mp.matrix([[mp.mpc(lam) if i == j else mp.mpf(0) for j in range(p)] for i in range(p)])
        for i in range(p):
            for j in range(p):
                center[i, j] += m[i][j]
        pert = center.copy()
        for i in range(p):
            for j in range(p):
                pert[i, j] += mp.mpc(qmat[i][j])
        # Gamma of the center block is block-Toeplitz from the scalar jet.
        jet = [mp.diff(mp.gamma, mp.mpc(lam), k) / mp.factorial(k) for k in range(p)]
        g0 = mp.zeros(p, p)
        off = 0
        allsz = sizes if sizes else [1] * p
        for s in allsz:
            for i in range(s):
                for j in range(i, s):
                    g0[off + i, off + j] = jet[j - i]
            off += s
        g1 = mat_gamma(pert)
        diff = g1 - g0
        n1, ninf = norms_1_inf(diff)
        norms.extend([n1, ninf])
    body.append("inline constexpr int kPerturbCount = %d;\n" % count)
    body.append("// layout per instance: ||Gamma(pert)-Gamma(center)||_1, same in inf-norm\n")
    body.append(carray("kPerturbNorms", norms, per_line=4))
    body.append("// first instance, for cross-language derivation checks:\n"
                "// p, nsizes, sizes..., lam re, lam im, R row-major, Q row-major (re, im)\n")
    body.append(carray("kPerturbFirstInstance", first_dump, per_line=4))
    body.append("}  // namespace oracle\n")
    emit_header(os.path.join(OUT, "oracle_perturb.hpp"), "perturb", "".join(body))


def main():
    os.makedirs(OUT, exist_ok=True)
    scalar_header()
    print("scalar done")
    matrix_header()
    print("matrix done")
    perturb_header()
    print("perturb done")


if __name__ == "__main__":
    main()
