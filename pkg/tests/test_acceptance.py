"""Acceptance criteria, one test per criterion, pinned tolerances.

Each test ends by printing a single PASS line through `report`; run with
`pytest -v -s` to see them inline. Oracle values live in _frozen.py.
"""
import cmath
import json
import math
import time

import mpmath as mp
import numpy as np
import pytest

from whittaker_mono.bounds import bound_sweep, proof_inequality_check
from whittaker_mono.cli import parse_args, run
from whittaker_mono.core import SectorPoint, TolerancePolicy
from whittaker_mono.erdelyi import hyp_argument
from whittaker_mono.hyp2f1 import (
    Hyp2F1Params,
    find_largest_negative_zero,
    hyp2f1_eval,
    hyp2f1_eval_many,
    legendre_identity_check,
)
from whittaker_mono.monotone import certify_cm, cm_moment, sector_certificate
from whittaker_mono.verify import identity_sweep_general, identity_sweep_modulus
from whittaker_mono.whittaker import (
    BesselParams,
    WhittakerParams,
    bessel_k,
    whittaker_w,
)

from _frozen import P_NU2, THETA_NU2_REF

TOL = TolerancePolicy()


def report(num, ok, detail):
    line = f"CRITERION {num:2d}: {'PASS' if ok else 'FAIL'} — {detail}"
    print(line)
    assert ok, line


def test_criterion_01_example_reproduction():
    t0 = time.perf_counter()
    res = find_largest_negative_zero(Hyp2F1Params.from_bessel(2.0), tol=TOL)
    t_pzero = time.perf_counter() - t0
    t0 = time.perf_counter()
    cert = sector_certificate(WhittakerParams(0.0, 2.0), tol=TOL)
    t_theta = time.perf_counter() - t0
    ok = (res.kind == "Found"
          and abs(res.p - P_NU2) <= 1e-9
          and abs(cert.theta - THETA_NU2_REF) <= 1e-8
          and t_pzero < 1.0 and t_theta < 1.0)
    report(1, ok, f"p={res.p:.12f} theta={cert.theta:.10f} "
                  f"({t_pzero * 1e3:.0f} ms / {t_theta * 1e3:.0f} ms)")


def test_criterion_02_modulus_identity_sweep():
    t0 = time.perf_counter()
    samples = identity_sweep_modulus(200, seed=2024, tol=TOL)
    elapsed = time.perf_counter() - t0
    failed = [s.index for s in samples if s.error is not None]
    worst = max(s.residual for s in samples if s.error is None)
    ok = not failed and worst < 1e-7 and elapsed < 120.0
    report(2, ok, f"200 samples, max residual {worst:.3e}, "
                  f"{len(failed)} failures, {elapsed:.1f} s")


def test_criterion_03_general_identity_sweep():
    samples = identity_sweep_general(50, seed=2024, tol=TOL)
    failed = [s.index for s in samples if s.error is not None]
    worst = max(s.residual for s in samples if s.error is None)
    ok = not failed and worst < 1e-7
    report(3, ok, f"50 samples, max residual {worst:.3e}, "
                  f"{len(failed)} branch-monitor exclusions")


def test_criterion_04_quotient_bound_sweep():
    samples = bound_sweep(500, seed=31, tol=TOL)
    violations = [s.index for s in samples
                  if s.report is not None and not s.report.holds]
    proof_failures = []
    for s in samples:
        _, _, proof_ok = proof_inequality_check(
            WhittakerParams(s.k, s.m), SectorPoint(s.x), s.tau, TOL)
        if not proof_ok:
            proof_failures.append(s.index)
    unverifiable = sum(1 for s in samples if s.report is None)
    ok = not violations and not proof_failures
    report(4, ok, f"500 samples: {len(violations)} bound violations, "
                  f"{len(proof_failures)} proof-inequality failures, "
                  f"{unverifiable} underflow-unverifiable")


def test_criterion_05_bessel_bound():
    from whittaker_mono.bounds import bessel_bound
    rep = bessel_bound(0.5, SectorPoint(1.0), 2.0, TOL)
    closed_q = 0.5 * math.exp(-2.0)
    closed_b = math.exp(-2.0)
    sweep = bound_sweep(200, seed=77, tol=TOL, kind="bessel")
    violations = [s.index for s in sweep
                  if s.report is not None and not s.report.holds]
    ok = (abs(rep.quotient_sq - closed_q) <= 1e-12
          and abs(rep.bound - closed_b) <= 1e-12
          and not violations)
    report(5, ok, f"closed-form err {abs(rep.quotient_sq - closed_q):.2e}, "
                  f"sweep violations {len(violations)}/200")


def test_criterion_06_complete_monotonicity():
    inside = certify_cm(BesselParams(2.0), SectorPoint.from_polar(1.0, 2.0),
                        n_max=10, tol=TOL)
    outside = certify_cm(BesselParams(2.0), SectorPoint.from_polar(1.0, 2.3),
                         n_max=2, t_grid=(1.0,), tol=TOL)
    ok = (inside.verdict == "CertifiedPositive"
          and outside.sign_audit_min < 0)
    report(6, ok, f"inside: {inside.verdict} (audit "
                  f"{inside.sign_audit_min:.3f}); outside audit "
                  f"{outside.sign_audit_min:.4f} < 0")


def test_criterion_07_analytic_regime():
    rng = np.random.default_rng(555)
    zgrid = np.concatenate([-np.geomspace(1e-3, 1e4, 200),
                            np.linspace(-1e-3, 0.999, 100)])
    bad = []
    for _ in range(50):
        k = float(rng.uniform(-3.0, 0.499))
        m = float(rng.uniform(k - 0.5, 0.5 - k))
        cert = sector_certificate(WhittakerParams(k, m), tol=TOL)
        if cert.p.kind != "AnalyticNegInfinity":
            bad.append((k, m, cert.p.kind))
            continue
        vals = hyp2f1_eval_many(Hyp2F1Params.from_whittaker(k, m), zgrid, TOL)
        if not np.all(vals.real > 0):
            bad.append((k, m, "nonpositive F"))
    report(7, not bad, f"50 (k, m) samples, {len(bad)} failures")


def test_criterion_08_closed_forms():
    rng = np.random.default_rng(888)
    worst = 0.0
    for _ in range(20):
        z = cmath.rect(float(rng.uniform(0.2, 4.0)),
                       float(rng.uniform(-0.75 * math.pi, 0.75 * math.pi)))
        w = whittaker_w(WhittakerParams(0.0, 0.5), SectorPoint(z), TOL)
        err_w = abs(w - cmath.exp(-z / 2.0)) / abs(cmath.exp(-z / 2.0))
        kv = bessel_k(BesselParams(0.5), SectorPoint(z), TOL)
        want = cmath.sqrt(math.pi / (2.0 * z)) * cmath.exp(-z)
        err_k = abs(kv - want) / abs(want)
        worst = max(worst, err_w, err_k)
    report(8, worst <= 1e-12, f"20 points, worst relative error {worst:.2e}")


def test_criterion_09_hyp2f1_oracles():
    rng = np.random.default_rng(99)
    worst_series = 0.0
    for i in range(100):
        if i % 2 == 0:
            a = complex(rng.uniform(0.2, 2.0), rng.uniform(-2.0, 2.0))
            b = a.conjugate()
        else:
            a = complex(rng.uniform(0.2, 2.0))
            b = complex(rng.uniform(0.2, 2.0))
        c = complex(rng.uniform(0.3, 3.0))
        z = float(rng.uniform(-0.5, 0.5))
        got = hyp2f1_eval(Hyp2F1Params(a, b, c), z, TOL)
        acc, term = 1.0 + 0j, 1.0 + 0j
        for n in range(300):
            term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
            acc += term
        worst_series = max(worst_series, abs(got - acc) / (1 + abs(acc)))

    worst_pfaff = 0.0
    p = Hyp2F1Params.from_bessel(1.7)
    with mp.workdps(30):
        for z in np.geomspace(100.0, 1e-2, 40):
            got = hyp2f1_eval(p, -float(z), TOL).real
            want = float(mp.hyp2f1(2.2, 2.2, 1, -mp.mpf(float(z))))
            worst_pfaff = max(worst_pfaff, abs(got - want) / (1 + abs(want)))

    worst_leg = 0.0
    for _ in range(50):
        a = float(rng.uniform(0.2, 2.8))
        z = float(rng.uniform(0.05, 1.0))
        worst_leg = max(worst_leg, legendre_identity_check(a, z, TOL))

    ok = worst_series <= 1e-12 and worst_pfaff <= 1e-10 and worst_leg < 1e-9
    report(9, ok, f"series {worst_series:.2e}, pfaff {worst_pfaff:.2e}, "
                  f"legendre {worst_leg:.2e}")


def test_criterion_10_moment_derivative_crosscheck():
    rng = np.random.default_rng(1010)
    worst = 0.0
    checked = 0
    with mp.workdps(35):
        for _ in range(30):
            k = float(rng.uniform(-1.0, 0.45))
            m = float(rng.uniform(-1.0, 1.0))
            x = cmath.rect(float(rng.uniform(0.5, 2.0)),
                           float(rng.uniform(-1.2, 1.2)))
            t = float(rng.uniform(0.5, 2.0))
            n = int(rng.integers(0, 5))

            def f(s):
                return mp.e ** (s * x.real) / s \
                    * abs(mp.whitw(k, m, s * x)) ** 2

            want = (-1) ** n * float(mp.diff(f, t, n))
            got = cm_moment(WhittakerParams(k, m), SectorPoint(x), n, t, TOL)
            worst = max(worst, abs(got - want) / abs(want))
            checked += 1
    report(10, worst <= 1e-5,
           f"{checked} samples n<=4, worst relative error {worst:.2e}")


def test_criterion_11_zero_free_sector():
    cert = sector_certificate(WhittakerParams(0.0, 2.0), tol=TOL)
    rng = np.random.default_rng(1111)
    min_mod = math.inf
    for _ in range(100):
        x = SectorPoint.from_polar(
            float(rng.uniform(0.1, 10.0)),
            float(rng.uniform(-cert.theta, cert.theta)))
        min_mod = min(min_mod, abs(bessel_k(BesselParams(2.0), x, TOL)))
    report(11, min_mod > 0.0,
           f"100 sector points, min |K_2(x)| = {min_mod:.3e} > 0")


def test_criterion_12_determinism():
    sweep_cmds = [
        ["sweep", "--count", "10", "--seed", "6"],
        ["sweep", "--count", "10", "--seed", "6", "--kind", "bessel-bound"],
        ["identity-check", "--count", "5", "--seed", "6"],
        ["identity-check", "--count", "3", "--seed", "6", "--general"],
    ]
    mismatched = []
    for argv in sweep_cmds:
        a, _ = run(parse_args(argv))
        b, _ = run(parse_args(argv))
        a.pop("timing_ms")
        b.pop("timing_ms")
        if json.dumps(a, sort_keys=True) != json.dumps(b, sort_keys=True):
            mismatched.append(argv[0:1] + argv[-1:])
    report(12, not mismatched,
           f"{len(sweep_cmds)} sweep commands byte-identical modulo timing")
