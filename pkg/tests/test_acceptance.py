"""The fourteen acceptance criteria, at their stated tolerances.

Each criterion records one PASS/FAIL line, printed in the terminal summary
(and immediately with -s). Where a criterion as literally worded is false, the
literal form is kept as a strict xfail next to the corrected check.
"""
import functools
import math
import time

import numpy as np
import pytest

import oracle
from conftest import ACCEPTANCE, PAIRS
from jacobi_logan.jacobi import (COSINE, JacobiParams, asymptotic_phi, phi, spectral_weight,
                                 spectral_weight_leading, weight_delta)
from jacobi_logan.logan import (BasisKind, EigenExpansion, ExtremizerKind, build_extremizer,
                                chebyshev_family, derivatives_at_tau, lambda_sup, p_polynomial,
                                sign_pattern, verify_orthogonality)
from jacobi_logan.transform import gauss_rule, integrate_dsigma, inverse_jacobi_transform
from jacobi_logan.verify import (CHEBYSHEV_FAMILIES, EIGEN_FAMILIES, chebyshev_suite,
                                 chebyshev_trials, derivative_identity_residual,
                                 eigen_zero_counts, gauss_test_functions, mehler_value,
                                 recurrence_residual, wronskian_residual, zerocount_suite)
from jacobi_logan.zerocount import shape_checks, theta
from jacobi_logan.zeros import lambda_star_zeros, lambda_zeros

SEED = 20240607
BUDGET = 60.0


def record(n, ok, detail, started):
    took = time.perf_counter() - started
    line = f"ACC {n:2d} {'PASS' if ok else 'FAIL'}  {detail}  [{took:.1f}s]"
    ACCEPTANCE[n] = line
    print(line)
    assert took < BUDGET, f"criterion {n} took {took:.1f}s"


def test_acc01_cosine_degeneration():
    t0 = time.perf_counter()
    tau = 1.0
    z = lambda_zeros(COSINE, tau, 5).zeros
    zero_err = float(np.max(np.abs(z - (2 * np.arange(1, 6) - 1) * math.pi / 2)))
    lam = np.linspace(0.0, 20.0, 200)
    f_err = 0.0
    for m in range(1, 6):
        nodes = (2 * np.arange(1, m + 1) - 1) * math.pi / (2 * tau)
        closed = np.cos(tau * lam) ** 2 / np.prod(1 - lam[:, None] ** 2 / nodes ** 2, axis=1)
        f_err = max(f_err, float(np.max(np.abs(build_extremizer(COSINE, m, tau)(lam) - closed))))
    ok = zero_err <= 1e-9 and f_err <= 1e-9
    record(1, ok, f"zeros err {zero_err:.1e}, f_m err {f_err:.1e} (tol 1e-9)", t0)
    assert ok


def test_acc02_d3_degeneration():
    t0 = time.perf_counter()
    p = JacobiParams(0.5, -0.5)
    # the closed form sin(lam t)/(lam sinh t) against the hypergeometric series
    rng = np.random.default_rng(SEED)
    series_err = 0.0
    with oracle.mp.workdps(30):
        for lam, t in zip(rng.uniform(0.1, 30, 20), rng.uniform(0.05, 4, 20)):
            lam, t = oracle.mp.mpf(lam), oracle.mp.mpf(t)
            closed = oracle.mp.sin(lam * t) / (lam * oracle.mp.sinh(t))
            series_err = max(series_err, float(abs(oracle.phi(0.5, -0.5, lam, t) - closed)))
    zero_err = 0.0
    for tau in (0.5, 1.0, 2.0):
        z = lambda_zeros(p, tau, 10).zeros
        zero_err = max(zero_err, float(np.max(np.abs(z - np.arange(1, 11) * math.pi / tau))))
    ok = series_err < 1e-20 and zero_err <= 1e-8
    record(2, ok, f"closed form vs series {series_err:.1e}, zeros err {zero_err:.1e} (tol 1e-8)",
           t0)
    assert ok


def test_acc03_bounds():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    worst, min_phi0 = -math.inf, math.inf
    for _ in range(100):
        a = rng.uniform(-0.5, 6.0)
        p = JacobiParams(a, rng.uniform(-0.5, a))
        lam, t = rng.uniform(0, 50, 100), rng.uniform(0, 5, 100)
        worst = max(worst, float(np.max(np.abs(phi(p, lam, t)))))
        min_phi0 = min(min_phi0, float(np.min(phi(p, 0.0, t))))
    ok = worst <= 1 + 1e-10 and min_phi0 > 0
    record(3, ok, f"max |phi| - 1 = {worst - 1:.1e}, min phi_0 = {min_phi0:.2e} over 10^4 draws",
           t0)
    assert ok


def test_acc04_interlacing():
    t0 = time.perf_counter()
    gap = math.inf
    for ab in PAIRS:
        p = JacobiParams(*ab)
        for tau in (0.5, 1.0, 2.0):
            merged = np.empty(40)
            merged[0::2] = lambda_zeros(p, tau, 20).zeros
            merged[1::2] = lambda_star_zeros(p, tau, 20).zeros
            gap = min(gap, float(np.min(np.diff(merged))))
    ok = gap > 0
    record(4, ok, f"smallest gap in lambda_1 < lambda_1* < ... < lambda_20* is {gap:.3f}", t0)
    assert ok


def test_acc05_identities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    rec = der = integ = meh = 0.0
    for ab in PAIRS:
        p = JacobiParams(*ab)
        lam, t = rng.uniform(0, 30, 20), rng.uniform(0.05, 4, 20)
        rec = max(rec, float(np.max(recurrence_residual(p, lam, t))))
        der = max(der, max(derivative_identity_residual(p, float(a), float(b))
                           for a, b in zip(lam[:8], t[:8])))
        integ = max(integ, max(wronskian_residual(p, float(a), float(b), 1.0)
                               for a, b in zip(rng.uniform(0, 20, 5), rng.uniform(0, 20, 5))))
        if p.alpha > -0.5:
            meh = max(meh, max(abs(mehler_value(p, float(a), float(b)) - phi(p, float(a), float(b)))
                               for a, b in zip(lam[:8], t[:8])))
    ok = rec <= 1e-8 and der <= 1e-6 and integ <= 1e-6 and meh <= 1e-6
    record(5, ok, f"recurrence {rec:.1e}, derivative {der:.1e}, integral {integ:.1e}, "
                  f"Mehler {meh:.1e}", t0)
    assert ok


def test_acc06_orthogonality():
    t0 = time.perf_counter()
    worst = 0.0
    for ab in PAIRS:
        for m in range(1, 5):
            rep = verify_orthogonality(JacobiParams(*ab), m, 1.0)
            worst = max(worst, max(r["ratio"] for r in rep.rows))
    ok = worst <= 1e-6
    record(6, ok, f"max |int l^2k f_m| / int l^2k |f_m| = {worst:.1e} (tol 1e-6)", t0)
    assert ok


def test_acc07_inverse_transform_certificate():
    t0 = time.perf_counter()
    tau = 1.0
    inside = outside = 0.0
    ts_all = np.linspace(0.0, 2 * tau, 101)
    for ab in PAIRS:
        p = JacobiParams(*ab)
        for m in range(1, 5):
            g = p_polynomial(p, m, tau)
            ext = build_extremizer(p, m, tau, ExtremizerKind.F_M)
            # int F_m d sigma diverges when the decay is too slow; t = 0 is then left out
            ts = ts_all[1:] if ext.decay >= -1 else ts_all
            vals = inverse_jacobi_transform(ext.product, p, ts)
            p0 = g(0.0)
            mask = ts <= tau
            inside = max(inside, float(np.max(np.abs(vals[mask] - g(ts[mask])))) / p0)
            outside = max(outside, float(np.max(np.abs(vals[~mask]))) / p0)
    ok = inside <= 1e-5 and outside <= 1e-5
    record(7, ok, f"|J^-1 F_m - p_m| / p_m(0) = {inside:.1e}, beyond tau {outside:.1e}", t0)
    assert ok


def test_acc08_extremizer_structure():
    t0 = time.perf_counter()
    shape_ok, vanish, nonzero = True, 0.0, math.inf
    for ab in PAIRS:
        p = JacobiParams(*ab)
        for m in range(1, 5):
            g = p_polynomial(p, m, 1.0)
            n = 2 * m - 1
            h = EigenExpansion(g.coefficients, g.frequencies, BasisKind.PSI, 1.0, p)
            shape = shape_checks(p, g, h, n)
            shape_ok &= shape["positive_before_theta"] and shape["decreasing"]
            vals, scale = derivatives_at_tau(p, g, n, with_scale=True)
            rel = np.abs(vals) / scale
            vanish = max(vanish, float(np.max(rel[1:n], initial=0.0)))
            nonzero = min(nonzero, float(rel[n]))
    ok = shape_ok and vanish <= 1e-6 and nonzero > 1e-6
    record(8, ok, f"positive and decreasing: {shape_ok}, orders 1..2m-2 {vanish:.1e}, "
                  f"order 2m-1 {nonzero:.2e}", t0)
    assert ok


def test_acc09_gauss_rule():
    t0 = time.perf_counter()
    min_w, exact = math.inf, 0.0
    for ab in PAIRS:
        p = JacobiParams(*ab)
        rule = gauss_rule(p, 1.0, 40)
        min_w = min(min_w, float(np.min(rule.weights)))
        for _, f in gauss_test_functions(p, 1.0):
            direct = integrate_dsigma(f)
            exact = max(exact, abs(rule.apply(f) - direct) / abs(direct))
    cos_err = max(float(np.max(np.abs(gauss_rule(COSINE, tau, 20).weights - 2 / tau)))
                  for tau in (0.5, 1.0, 2.0))
    ok = min_w > 0 and exact <= 1e-5 and cos_err <= 1e-8
    record(9, ok, f"min weight {min_w:.2e}, exactness {exact:.1e}, cosine weights {cos_err:.1e}",
           t0)
    assert ok


def _sign_patterns():
    out = []
    for ab in PAIRS:
        for m in range(1, 5):
            out.append(sign_pattern(build_extremizer(JacobiParams(*ab), m, 1.0),
                                    k_first=m, k_last=m + 10))
    return out


def test_acc10_logan_functional():
    t0 = time.perf_counter()
    sup_err = 0.0
    for ab in PAIRS:
        for m in range(1, 5):
            ext = build_extremizer(JacobiParams(*ab), m, 1.0)
            sup_err = max(sup_err, abs(lambda_sup(ext, m) - float(ext.zeros[-1])))
    pats = _sign_patterns()
    literal = sum(not s for pat in pats for s in pat.as_stated)
    forced = all(pat.expected_holds for pat in pats)
    total = sum(len(pat.ks) for pat in pats)
    ok = sup_err <= 1e-8 and literal == 0
    record(10, ok, f"lambda_sup err {sup_err:.1e}; (-1)^k f_m > 0 fails on {literal}/{total} "
                   f"intervals, the forced sign (-1)^m holds on all: {forced}", t0)
    # the attainable part: Lambda_m(f_m) = lambda_m and the sign forced by the zeros
    assert sup_err <= 1e-8 and forced


@pytest.mark.xfail(strict=True, reason="beyond lambda_m every factor 1 - l^2/l_j^2 is negative, "
                                       "so f_m keeps the sign (-1)^m instead of alternating")
def test_acc10_literal_sign_pattern():
    assert all(pat.as_stated_holds for pat in _sign_patterns())


# m <= 3 keeps the 500-point transforms inside the time budget
ACC11_ORDERS = (1, 2, 3)


@functools.lru_cache(maxsize=None)
def _inverse_f(ab, m, tau=1.0, points=500):
    p = JacobiParams(*ab)
    ext = build_extremizer(p, m, tau)
    ts = np.linspace(0.0, 2 * tau, points)
    return ts, inverse_jacobi_transform(ext.product, p, ts)


def test_acc11_positive_definiteness():
    t0 = time.perf_counter()
    worst_scaled, literal_ok, at_zero = 0.0, True, 0.0
    for ab in PAIRS:
        for m in ACC11_ORDERS:
            ts, vals = _inverse_f(ab, m)
            worst_scaled = max(worst_scaled, float(-np.min(vals) / np.max(np.abs(vals))))
            literal_ok &= bool(np.all(vals >= -1e-6 * vals[0]))
            at_zero = max(at_zero, abs(float(vals[0])) / float(np.max(np.abs(vals))))
    record(11, literal_ok, f"J^-1 f_m(0)/sup = {at_zero:.1e} (the literal scale is zero); "
                           f"min J^-1 f_m / sup = {-worst_scaled:.1e} (tol -1e-6)", t0)
    # J^-1 f_m(0) = p_m(tau) = 0, so the tolerance is taken against sup |J^-1 f_m|
    assert worst_scaled <= 1e-6


@pytest.mark.xfail(strict=False, reason="J^-1 f_m(0) = p_m(tau) = 0, so the literal bound "
                                        "asks rounding noise to be non-negative")
def test_acc11_literal_scale():
    for ab in PAIRS:
        for m in ACC11_ORDERS:
            ts, vals = _inverse_f(ab, m)
            assert np.all(vals >= -1e-6 * vals[0])


def test_acc12_zero_interval():
    t0 = time.perf_counter()
    failed = []
    for ab in PAIRS:
        rep = zerocount_suite(JacobiParams(*ab), n_max=6, gammas=(1.0, 2.0, math.pi))
        failed += [f"{ab}:{c.name}" for c in rep.checks if not c.passed]
    th_err = max(abs(theta(COSINE, n, g) - n * math.pi / (2 * g))
                 for n in range(1, 7) for g in (1.0, 2.0, math.pi))
    ok = not failed and th_err <= 1e-9
    record(12, ok, f"star sums, r_m multiplicity and G_n certificates: {len(failed)} failed; "
                   f"cosine theta err {th_err:.1e}", t0)
    assert ok, failed


def test_acc13_chebyshev():
    t0 = time.perf_counter()
    failed = []
    for ab in PAIRS:
        rep = chebyshev_suite(JacobiParams(*ab), 1.0, size=6, trials=100, seed=SEED)
        failed += [f"{ab}:{c.name}" for c in rep.checks if not c.passed]
    lit = _literal_phi_mu()
    record(13, not failed and lit == (5, [0, 1, 2, 3, 4, 5]),
           f"{len(CHEBYSHEV_FAMILIES)} families x 100 trials: {len(failed)} failed checks; "
           f"phi_mu alone: max zeros {lit[0]} (limit 5), member zero counts {lit[1]}", t0)
    assert not failed, failed


def _literal_phi_mu(p=JacobiParams(1.0, 0.0)):
    fam = chebyshev_family(p, 1.0, "phi_mu", 6)
    worst = chebyshev_trials(fam, 6, 100, np.random.default_rng(SEED))
    return worst, eigen_zero_counts(fam)


@pytest.mark.xfail(strict=True, reason="phi_mu_1 is the second Neumann eigenfunction: the "
                                       "constant is missing from the family")
def test_acc13_literal_phi_mu_family():
    worst, counts = _literal_phi_mu()
    assert worst <= 5 and counts == list(range(6))


def test_acc14_asymptotics():
    t0 = time.perf_counter()
    lam = np.linspace(50.0, 500.0, 2000)
    weight_ok, spread = True, 1.0
    cs = []
    for ab in PAIRS:
        p = JacobiParams(*ab)
        ratio = spectral_weight(p, lam) / spectral_weight_leading(p, lam)
        weight_ok &= bool(np.all(np.abs(ratio - 1) <= 5 / lam))
        for t in (0.5, 1.0, 2.0):
            # |phi - asymptotic| relative to the envelope, times lambda, per window;
            # decay like 1/lambda means these stay level across [50, 500]
            env = math.sqrt(2 / math.pi) / np.sqrt(weight_delta(p, t) * spectral_weight(p, lam))
            scaled = lam * np.abs(phi(p, lam, t) - asymptotic_phi(p, lam, t)) / env
            win = np.array([np.max(w) for w in np.array_split(scaled, 8)])
            if np.max(win) < 1e-10:
                continue        # the asymptotic form is exact here
            cs.append(float(np.max(win)))
            spread = max(spread, float(np.max(win) / np.min(win)))
    ok = weight_ok and spread <= 1.1
    record(14, ok, f"weight ratio within 1 +- 5/lambda: {weight_ok}; fitted C in "
                   f"[{min(cs):.2f}, {max(cs):.2f}], window spread {spread:.3f}", t0)
    assert ok
