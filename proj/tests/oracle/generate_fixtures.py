#!/usr/bin/env python3
"""High-precision reference values for the test suites.

Everything here is computed with mpmath at 50+ digits, independently of the C++
code: direct series summation, polyroots at raised working precision, and mpmath
quadrature of the defining integrals. Run once; the output is committed as
tests/fixtures/oracle.json and read by the unit and acceptance tests.

    python3 tests/oracle/generate_fixtures.py > tests/fixtures/oracle.json
"""

import json
import sys

import mpmath as mp

mp.mp.dps = 60


def cpx(z):
    z = mp.mpc(z)
    return [float(z.real), float(z.imag)]


def section(coeff, n, z):
    """sum_{k<=n} c_k z^k, summed term by term."""
    total = mp.mpf(0)
    zk = mp.mpf(1)
    for k in range(n + 1):
        total += coeff(k) * zk
        zk *= z
    return total


def exp_coeff(k):
    return 1 / mp.factorial(k)


def ml_coeff(lam):
    return lambda k: 1 / mp.gamma(mp.mpf(k) / lam + 1)


def ml_value(lam, z, terms=4000):
    # E_{1/lam}(z) by direct summation; the terms are far below 10^-60 at the cutoff
    total = mp.mpf(0)
    zk = mp.mpf(1)
    for k in range(terms):
        term = zk / mp.gamma(mp.mpf(k) / lam + 1)
        total += term
        if k > 10 and abs(term) < mp.mpf(10) ** (-mp.mp.dps - 5) * abs(total):
            break
        zk *= z
    return total


def section5_coeff(k):
    # (e^z - e^{-z}(1 + 2z))/z^2 = sum_k (1 + (-1)^k (2k + 3)) z^k / (k + 2)!
    return (1 + (-1) ** k * (2 * k + 3)) / mp.factorial(k + 2)


def scaled_zeros(coeff, n, scale):
    """Zeros of p_n(scale z) via polyroots at raised precision."""
    with mp.workdps(120):
        coeffs = [coeff(k) * mp.mpf(scale) ** k for k in range(n + 1)]
        roots = mp.polyroots(list(reversed(coeffs)), maxsteps=2000, extraprec=600)
    return [mp.mpc(r) for r in roots]


def szego_curve(samples=20000):
    """|z e^{1-z}| = 1 with |z| <= 1, in polar form r(t)."""
    pts = []
    for j in range(samples + 1):
        t = -mp.pi + 2 * mp.pi * j / samples
        if t == 0:
            pts.append(mp.mpc(1))
            continue
        g = lambda r: r * mp.cos(t) - 1 - mp.log(r)
        # bisection: g is decreasing on (0, 1] and g(1) = cos t - 1 < 0
        lo, hi = mp.mpf("1e-12"), mp.mpf(1)
        for _ in range(80):
            mid = (lo + hi) / 2
            if g(mid) > 0:
                lo = mid
            else:
                hi = mid
        r = (lo + hi) / 2
        pts.append(mp.mpc(r * mp.cos(t), r * mp.sin(t)))
    return pts


def polyline_distance(curve, z):
    best = abs(curve[0] - z)
    for a, b in zip(curve, curve[1:]):
        d = b - a
        len2 = abs(d) ** 2
        t = 0 if len2 == 0 else min(1, max(0, mp.re((z - a) * mp.conj(d)) / len2))
        best = min(best, abs(a + t * d - z))
    return best


def phi(z, lam=1):
    return (z ** lam - 1 - lam * mp.log(z)) / lam


def g_oracle(n, z, theta, through):
    """(1/2 pi i) int e^{n phi(s)} ds/(s - z) along e^{-i theta} -> through -> e^{i theta}.

    The broken line is homotopic to the sector arc of the contour without crossing z
    as long as z stays on the same side, so it gives the same value.
    """
    a = mp.expj(-theta)
    b = mp.expj(theta)
    f = lambda s: mp.exp(n * phi(s)) / (s - z)
    total = mp.quad(lambda t: f(a + t * (through - a)) * (through - a), [0, 1])
    total += mp.quad(lambda t: f(through + t * (b - through)) * (b - through), [0, 1])
    return total / (2j * mp.pi)


def main():
    fx = {}

    # special functions
    fx["erfc_1.5+0.5i"] = cpx(mp.erfc(mp.mpc(1.5, 0.5)))
    # erfc as the defining integral along the horizontal ray from z
    z0 = mp.mpc(1.5, 0.5)
    ray = 2 / mp.sqrt(mp.pi) * mp.quad(lambda t: mp.exp(-(z0 + t) ** 2), [0, mp.inf])
    fx["erfc_1.5+0.5i_quadrature"] = cpx(ray)
    zero = mp.findroot(mp.erfc, mp.mpc(-1.35, 1.99))
    fx["erfc_first_zero"] = cpx(zero)
    zeta = mp.mpc(2, 3)
    h_quad = mp.quad(lambda u: mp.exp(-u * u) / (u - zeta), [-mp.inf, 0, mp.inf]) / (2j * mp.pi)
    fx["h_2+3i"] = cpx(h_quad)
    fx["ml_lambda2_z4"] = float(ml_value(2, mp.mpf(4)))
    fx["log_gamma_0.5+2i"] = cpx(mp.loggamma(mp.mpc(0.5, 2)))
    # E_{1/2}(z) = 2 e^{z^2}(1 + delta) in the growth form
    fx["ml_lambda2_deviation_z6"] = float(ml_value(2, mp.mpf(6)) / (2 * mp.exp(36)) - 1)

    # sections and ratios
    p50 = section(exp_coeff, 50, mp.mpf(50))
    fx["exp_p50_at_50_over_e50"] = float(p50 / mp.exp(50))
    n, w = 100, mp.mpc(0, 2)
    z = n + w * mp.sqrt(n)
    fx["newman_rivlin_n100_w2i"] = cpx(section(exp_coeff, n, z) / mp.exp(z))
    lam, n, w = 2, 128, mp.mpf(-1)
    r = (mp.mpf(n) / lam) ** (1 / mp.mpf(lam)) * mp.exp(1 / mp.mpf(2 * n))
    u = 1 + w * mp.sqrt(mp.mpf(2) / (lam * n))
    fx["esv_lambda2_n128_w-1"] = float(section(ml_coeff(lam), n, r * u) / (u ** n * ml_value(lam, r)))
    n, w = 1024, mp.mpc(-1, 1)
    z = n * (1 + w / mp.sqrt(n))
    ratio = section(exp_coeff, n - 1, z) / mp.exp(z)
    fx["theorem1_exp_n1024_w-1+i_abs_error"] = float(abs(ratio - mp.erfc(w / mp.sqrt(2)) / 2))

    # theorem 1 pipeline golden, n = 64, w = -0.5 - 0.5i (z inside the contour)
    n, w = 64, mp.mpc(-0.5, -0.5)
    z = 1 + w / mp.sqrt(n)
    f = mp.exp(n * z)
    p = section(exp_coeff, n - 1, n * z)
    F = (f - p) / (mp.e * z) ** n
    fx["pipeline_exp_n64_w-0.5-0.5i"] = {
        "F": cpx(F),
        "ratio": cpx(p / f),
        "abs_error": float(abs(p / f - mp.erfc(w / mp.sqrt(2)) / 2)),
    }

    # zeros
    six = scaled_zeros(exp_coeff, 6, 1)
    fx["parabola_min_slack_n6"] = float(
        min(max(mp.im(q) ** 2 - 4 * (mp.re(q) + 1), -(mp.re(q) + 1)) for q in six))
    curve = szego_curve()
    for n in (30, 60):
        zs = scaled_zeros(exp_coeff, n, n)
        fx[f"szego_max_distance_n{n}"] = float(max(polyline_distance(curve, q) for q in zs))
    zs = scaled_zeros(section5_coeff, 80, 80)
    args = sorted(abs(mp.arg(q - 1)) for q in zs if abs(q - 1) <= mp.mpf("0.5"))
    m = len(args)
    med = args[m // 2] if m % 2 else (args[m // 2 - 1] + args[m // 2]) / 2
    fx["section5_n80_window0.5"] = {"count": m, "median_abs_arg": float(med)}

    # Cauchy-integral objects on the lambda = 1 contour, theta = pi/3
    theta = mp.pi / 3
    fx["G_n100_z1.05"] = cpx(g_oracle(100, mp.mpf("1.05"), theta, mp.mpf("0.9")))
    m_abs = {}
    for n in (32, 64, 128):
        z = mp.mpf("1.02")
        G = g_oracle(n, z, theta, mp.mpf("0.9"))
        # z lies right of the descent arc: P_n = -e^{n phi} erfc(sqrt(n phi))/2
        P = -mp.exp(n * phi(z)) * mp.erfc(mp.sqrt(n * phi(z))) / 2
        m_abs[str(n)] = float(abs(G - P))
    fx["m_abs_z1.02"] = m_abs

    json.dump(fx, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
