"""Blasius reference values: f''' + f f''/2 = 0, f(0) = f'(0) = 0, f'(inf) = 1.

Integrates with scipy's DOP853 at rtol 1e-13 and solves f'(zeta_max) = 1 with
brentq, independently of the RK4 code under test. Also runs a plain
10^6-step RK4 bisection on [0, 12] in numpy-free Python floats for the
fixed-step reference.
"""

from scipy.integrate import solve_ivp
from scipy.optimize import brentq


def rhs(_, s):
    return [s[1], s[2], -0.5 * s[0] * s[2]]


def fp_end(fpp0, zmax):
    sol = solve_ivp(rhs, (0.0, zmax), [0.0, 0.0, fpp0], method="DOP853", rtol=1e-13, atol=1e-15)
    return sol.y[1, -1] - 1.0


def profile_at(fpp0, z):
    sol = solve_ivp(rhs, (0.0, z), [0.0, 0.0, fpp0], method="DOP853", rtol=1e-13, atol=1e-15)
    return sol.y[:, -1]


def rk4_fixed(fpp0, zmax, n):
    h = zmax / n
    f, fp, fpp = 0.0, 0.0, fpp0
    for _ in range(n):
        def d(a, b, c):
            return b, c, -0.5 * a * c
        k1 = d(f, fp, fpp)
        k2 = d(f + 0.5 * h * k1[0], fp + 0.5 * h * k1[1], fpp + 0.5 * h * k1[2])
        k3 = d(f + 0.5 * h * k2[0], fp + 0.5 * h * k2[1], fpp + 0.5 * h * k2[2])
        k4 = d(f + h * k3[0], fp + h * k3[1], fpp + h * k3[2])
        f += h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
        fp += h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
        fpp += h / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])
    return fp - 1.0


if __name__ == "__main__":
    a = brentq(lambda s: fp_end(s, 12.0), 0.1, 1.0, xtol=1e-15)
    a20 = brentq(lambda s: fp_end(s, 20.0), 0.1, 1.0, xtol=1e-15)
    f, fp, fpp = profile_at(a, 1.0)
    print(f"fpp0_zmax12   = {a:.15f}")
    print(f"fpp0_zmax20   = {a20:.15f}")
    print(f"f_at_1        = {f:.15f}")
    print(f"fp_at_1       = {fp:.15f}")
    print(f"fpp_at_1      = {fpp:.15f}")
    lo, hi = 0.1, 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if rk4_fixed(mid, 12.0, 10**6) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12:
            break
    print(f"fpp0_rk4_1e6  = {0.5 * (lo + hi):.15f}")
