"""Constants chain in 50-digit arithmetic.

beta  = 1.1 * max over the sweep grid eta_i = 1/4 + (3/4 - 1e-6) i / n, i = 1..n,
        of 4 W^2 |phi''| / phi with W = C0 (1-eta) sqrt(-ln(mu (1-eta))),
        phi = (1-eta) exp(8/3 eta - 8/3)
b     = c0/4 exp(-beta X) exp(-8/3)
K     = e^X max(2, 2 C1^(1/alpha0 - 1))
delta = min(0.1 min_{alpha in {alpha0/2, alpha0}} alpha(1-alpha) b^2, 1/(321 e^X), min(1, C1)/(b 2^alpha0))
beta0_max = b^2 alpha0 (1 - alpha0), beta0 = 0.9 beta0_max

The grid max is also compared with the continuous maximum found by a
bracketed golden-section search, and the temporal constant
K_min = max_eta 2 C0^2 (1-eta)(-ln(mu(1-eta))) is swept on 10^6 points.
"""

import numpy as np
from mpmath import mp, mpf, exp, log, sqrt, findroot, diff

mp.dps = 50


def need(eta, C0, mu):
    s = 1 - eta
    W = C0 * s * sqrt(-log(mu * s))
    e = exp(mpf(8) / 3 * eta - mpf(8) / 3)
    phi = s * e
    phidd = e * (mpf(64) / 9 * s - mpf(16) / 3)
    return 4 * W * W * abs(phidd) / phi


def chain(c0, mu, alpha0, C1, X, n=100000):
    c0, mu, alpha0, C1, X = map(mpf, (c0, mu, alpha0, C1, X))
    C0 = 1 / c0
    lo, hi = mpf(1) / 4, 1 - mpf("1e-6")
    # Sweep nodes are formed in double precision exactly as the C++ does.
    worst, arg = mpf(0), None
    for i in range(1, n + 1):
        eta_d = 0.25 + (float(hi) - 0.25) * i / n
        v = need(mpf(eta_d), C0, mu)
        if v > worst:
            worst, arg = v, eta_d
    beta = mpf("1.1") * worst
    b = c0 / 4 * exp(-beta * X) * exp(-mpf(8) / 3)
    K = exp(X) * max(mpf(2), 2 * C1 ** (1 / alpha0 - 1))
    a_lo, a_hi = alpha0 / 2, alpha0
    em = min(a_lo * (1 - a_lo), a_hi * (1 - a_hi))
    delta = min(mpf("0.1") * em * b * b, 1 / (321 * exp(X)), min(mpf(1), C1) / (b * 2 ** alpha0))
    b0max = b * b * alpha0 * (1 - alpha0)
    # continuous maximum near the grid argmax
    g = lambda e: need(e, C0, mu)
    a, c = mpf(arg) - mpf(3) / (4 * n), mpf(arg) + mpf(3) / (4 * n)
    c = min(c, hi)
    ratio = (sqrt(5) - 1) / 2
    for _ in range(200):
        x1 = c - ratio * (c - a)
        x2 = a + ratio * (c - a)
        if g(x1) > g(x2):
            c = x2
        else:
            a = x1
    cont = g((a + c) / 2)
    return dict(beta=beta, b=b, K=K, delta=delta, beta0_max=b0max, beta0=mpf("0.9") * b0max,
                grid_max=worst, argmax=arg, continuous_max=cont)


if __name__ == "__main__":
    for name, args in [("reference", (0.5, 0.005, 0.5, 1, 1)), ("run", (0.25, 0.005, 0.5, 1, 0.1))]:
        r = chain(*args)
        print(f"[{name}] c0, mu, alpha0, C1, X = {args}")
        for k in ("beta", "b", "K", "delta", "beta0_max", "beta0", "grid_max", "continuous_max"):
            print(f"  {k:15s} = {mp.nstr(r[k], 20)}")
        print(f"  argmax          = {r['argmax']!r}")
    for c0 in (0.5, 0.25):
        C0, mu = 1 / c0, 0.005
        eta = np.linspace(0.0, 1.0 - 1e-12, 10**6 + 1)
        s = 1.0 - eta
        kmin = np.max(2 * C0**2 * s * (-np.log(mu * s)))
        print(f"K_min(c0={c0}) sweep = {kmin:.17g}, closed form 2 C0^2 (-ln mu) = {2 * C0**2 * -np.log(mu):.17g}")
