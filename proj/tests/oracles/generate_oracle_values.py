#!/usr/bin/env python3
"""Independent high-precision reference values for the C++ test suites.

Every quantity is evaluated straight from its defining formula (physicists'
Hermite polynomials, factorials, brute-force quadrature) with mpmath at 40
digits. Nothing here shares code with the library. Run it to regenerate
tests/oracle_values.hpp.
"""
import mpmath as mp

mp.mp.dps = 40
PI = mp.pi


def rho(n, a, x):
    return a**n * mp.hermite(n, x) / (mp.mpf(2) ** (mp.mpf(n) / 2) * mp.factorial(n))


def mu(n, a, x):
    return rho(n, a, x) * mp.e ** (-(a * a + x * x) / 2)


def mus(a, x, count):
    return [mu(n, a, x) for n in range(count)]


def norm_const(m, tau):
    s = mp.mpf(0)
    for i, mi in enumerate(m):
        for j, mj in enumerate(m):
            s += mi * mj * mp.e ** (-(PI**2) / 4 * (i - j) ** 2 * tau**2)
    return PI ** mp.mpf(0.25) / mp.sqrt(s)


def phi_one(q, m, tau, N):
    return N / mp.sqrt(PI) * sum(mn * mp.e ** (-q * q / 2 + 1j * PI * n * tau * q) for n, mn in enumerate(m))


def psi_one(p, m, tau, N):
    return N / mp.sqrt(PI) * sum(mn * mp.e ** (-((p - PI * n * tau) ** 2) / 2) for n, mn in enumerate(m))


def pi_q_inf(a, x, count):
    r = [rho(n, a, x) for n in range(count)]
    num = mp.mpf(0)
    k = 0
    while 2 * (2 * k + 1) < count:
        d = 2 * (2 * k + 1)
        num += (-1) ** k / mp.mpf(2 * k + 1) * sum(r[n] * r[n + d] for n in range(count - d))
        k += 1
    return mp.mpf(1) / 2 + 2 / PI * num / sum(v * v for v in r)


def pi_pm_inf(a, x, plus, count):
    r = [rho(n, a, x) for n in range(count)]
    odd = sum(r[n] ** 2 for n in range(1, count, 2))
    fam = sum(r[n] ** 2 for n in range(0 if plus else 2, count, 4))
    return odd / (2 * (odd + 2 * fam))


def homodyne_density(a, x, count):
    return sum(v * v for v in mus(a, x, count)) / mp.sqrt(PI)


def fmt(v):
    return mp.nstr(v, 20, min_fixed=-100, max_fixed=100) if abs(v) > 0 else "0.0"


def main():
    out = []
    emit = lambda name, v: out.append(f"inline constexpr double {name} = {fmt(v)};")

    # coefficients(alpha = 2, x = 1), n = 0..20
    m21 = mus(mp.mpf(2), mp.mpf(1), 21)
    out.append("inline constexpr std::array<double, 21> kMuAlpha2X1 = {")
    out += [f"    {fmt(v)}," for v in m21]
    out.append("};")

    # normalization constant at alpha = 2, tau = 2, x = 0
    m = mus(mp.mpf(2), mp.mpf(0), 60)
    N = norm_const(m, mp.mpf(2))
    emit("kNormAlpha2Tau2X0", N)

    # phi_one(0.1) at alpha = 2, tau = 2, x = 0
    v = phi_one(mp.mpf("0.1"), m, mp.mpf(2), N)
    emit("kPhiRe_A2T2X0_q01", v.real)
    emit("kPhiIm_A2T2X0_q01", v.imag)

    # psi_one(pi*tau) at alpha = 1.5, tau = 3, x = 0.4
    m2 = mus(mp.mpf("1.5"), mp.mpf("0.4"), 60)
    N2 = norm_const(m2, mp.mpf(3))
    emit("kPsi_A15T3X04_pPiTau", psi_one(PI * 3, m2, mp.mpf(3), N2))

    # <0|1> = int conj(phi_one(q - theta)) phi_one(q) dq at alpha = 2, tau = 2, x = 0
    th = mp.mpf(1) / 4
    f = lambda q: mp.conj(phi_one(q - th, m, mp.mpf(2), N)) * phi_one(q, m, mp.mpf(2), N)
    mp.mp.dps = 25
    ov = mp.quad(f, mp.linspace(-12, 12, 97))
    mp.mp.dps = 40
    emit("kOverlapRe_A2T2X0", ov.real)
    emit("kOverlapIm_A2T2X0", ov.imag)

    # Pi_q at alpha = 2, tau = 2, x = 0 by brute-force region integration
    dens = lambda q: abs(phi_one(q, m, mp.mpf(2), N)) ** 2
    mp.mp.dps = 25
    total = mp.mpf(0)
    for s in range(-16, 17):
        lo, hi = (2 * s - mp.mpf(1) / 2) * th, (2 * s + mp.mpf(1) / 2) * th
        total += mp.quad(dens, [lo, hi])
    mp.mp.dps = 40
    emit("kPiQ_A2T2X0", total)

    emit("kPiQInf_A15X0", pi_q_inf(mp.mpf("1.5"), mp.mpf(0), 80))
    emit("kPiQInf_A15X05", pi_q_inf(mp.mpf("1.5"), mp.mpf("0.5"), 80))
    emit("kPiPlusInf_A15X05", pi_pm_inf(mp.mpf("1.5"), mp.mpf("0.5"), True, 80))
    emit("kPiMinusInf_A15X05", pi_pm_inf(mp.mpf("1.5"), mp.mpf("0.5"), False, 80))
    emit("kHomodyne_A2X2Sqrt2", homodyne_density(mp.mpf(2), 2 * mp.sqrt(2), 80))

    print("// Generated by tests/oracles/generate_oracle_values.py. Do not edit.")
    print("#pragma once\n\n#include <array>\n\nnamespace gkpkerr::oracle {\n")
    print("\n".join(out))
    print("\n}  // namespace gkpkerr::oracle")


if __name__ == "__main__":
    main()
