"""Acceptance suite: every release-gating criterion at its stated tolerance.

Each test prints one PASS line (pytest -s shows them; failures raise).
Stated runtime budgets are enforced with perf_counter.
"""

import math
import time
import numpy as np
import pytest

import zetaforge as zf
from conftest import random_standardized
from zetaforge.bounds import published_example_threshold
from zetaforge.cli import table_rows

SQRT_2PI = math.sqrt(2.0 * math.pi)


def report(num, text):
    print(f"ACCEPTANCE {num:2d}: PASS - {text}")


def test_criterion_01_zeta3_rademacher_normal():
    t0 = time.perf_counter()
    got = zf.zeta_vs_normal(zf.rademacher(), 3, tol=1e-10)
    elapsed = time.perf_counter() - t0
    want = (4.0 / SQRT_2PI - 1.0) / 6.0
    assert abs(got - want) <= 1e-8
    assert elapsed < 1.0
    report(1, f"zeta_3(Q,N) = {got:.10f} vs {want:.10f} in {elapsed:.3f}s")


def test_criterion_02_zeta4_rademacher_normal():
    t0 = time.perf_counter()
    got = zf.zeta_vs_normal(zf.rademacher(), 4, tol=1e-10)
    elapsed = time.perf_counter() - t0
    assert abs(got - 1.0 / 12.0) <= 1e-8
    assert elapsed < 1.0
    report(2, f"zeta_4(Q,N) = {got:.10f} vs {1/12:.10f} in {elapsed:.3f}s")


def test_criterion_03_epsilon_sandwich_up_to_50():
    t0 = time.perf_counter()
    for n in range(1, 51):
        rep = zf.epsilon_n(n, tol=1e-10)
        assert rep.lower_line <= rep.value + 1e-11
        assert rep.value < rep.upper_line
        assert rep.upper_line < 0.1352 / n
        if n == 1:
            assert abs(rep.value - rep.lower_line) <= 1e-9
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    report(3, f"epsilon_n sandwich holds for n = 1..50 in {elapsed:.1f}s")


def test_criterion_04_main_equality_certificate():
    t0 = time.perf_counter()
    worst = 0.0
    for rho in (1.2, 1.5, 2.0):
        for n in (1, 2, 3):
            conv = zf.standardize(zf.convolve([zf.two_point_law(rho)] * n))
            ref = zf.standardize(zf.binomial_half(n)) if n > 1 \
                else zf.rademacher()
            lhs = zf.zeta_discrete(conv, ref, 3)
            gap = abs(lhs - zf.b_value(rho) / (6.0 * math.sqrt(n)))
            worst = max(worst, gap)
            assert gap <= 1e-6
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    report(4, f"equality certificate worst gap {worst:.2e} in {elapsed:.2f}s")


def test_criterion_05_randomized_main_theorem():
    t0 = time.perf_counter()
    reports = zf.run_suite("main", 200, 42, tol=1e-9)
    elapsed = time.perf_counter() - t0
    margins = [r.margin for r in reports]
    assert len(reports) == 200
    assert min(margins) >= -1e-9
    assert elapsed < 300.0
    report(5, f"200 randomized margins >= {min(margins):.2e} in {elapsed:.1f}s")


def test_criterion_06_improvement_table():
    table = [(1.01, 1), (1.10, 2), (1.18, 3), (1.24, 4), (1.30, 5),
             (1.52, 10), (1.66, 15), (1.77, 20), (1.94, 30), (2.17, 50),
             (2.33, 70), (2.519, 100)]
    for rho, n_min in table:
        assert zf.improvement_n_min(rho) == n_min
    assert published_example_threshold(zf.catalog_rho("exponential")) == 82
    assert published_example_threshold(zf.catalog_rho("uniform")) == 5
    for p, want in [(0.45, 1), (0.38, 2), (0.34, 3), (0.31, 4), (0.2, 17),
                    (0.1, 149)]:
        assert published_example_threshold(
            zf.catalog_rho("bernoulli", p)) == want
    for lam, want in [(1.0, 19), (2.0, 15), (4.0, 14), (8.0, 13)]:
        assert published_example_threshold(
            zf.catalog_rho("poisson", lam)) == want
    assert published_example_threshold(zf.catalog_rho("geometric", 0.1)) == 83
    by_name = {r["name"]: r["n_min"] for r in table_rows()}
    assert by_name["geometric_p=0.1"] == 83
    report(6, "12 table columns and all worked thresholds reproduced")


def test_criterion_07_krawtchouk():
    for n in range(1, 13):
        for k in range(1, n + 1):
            for a in range(n + 1):
                zf.kraw_partial_sum(n, k, a, exact=True)  # exact assert inside
    worst = 0.0
    for n in range(1, 61):
        want = sum(abs(k - n / 2.0) ** 3 * math.comb(n, k)
                   for k in range(n + 1)) / 2.0 ** n
        rel = abs(zf.binom_abs3(n) - want) / want
        worst = max(worst, rel)
        assert rel <= 1e-11
    report(7, f"closed summation exact (n<=12); abs3 rel err <= {worst:.2e}")


def test_criterion_08_extremal_search_certificate():
    t0 = time.perf_counter()
    worst = -math.inf
    for rho in (1.1, 1.5, 2.0, 3.0):
        res = zf.extremal_three_point_search(rho, grid_density=200)
        excess = res.sup_value - res.bound
        worst = max(worst, excess)
        assert excess <= 1e-6
        assert abs(res.corner_value - res.bound) <= 1e-6
    elapsed = time.perf_counter() - t0
    assert elapsed < 600.0
    report(8, f"3-point sup excess <= {worst:.2e} on 200x200 grids "
              f"in {elapsed:.1f}s")


def test_criterion_09_osculation():
    from test_osculation import interp_residual, rand_params
    from zetaforge.osculation import _block_v_gt, _block_v_le
    rng = np.random.default_rng(5150)
    worst = 0.0
    for branch in ("le", "gt"):
        for _ in range(100):
            r, u, v = rand_params(rng, branch)
            co = zf.oscul_coeffs(r, u, v)
            worst = max(worst, interp_residual(co))
            assert interp_residual(co) <= 1e-9
            assert zf.dominance_check(co)
    for v in (1.0 - 1e-9, 1.0, 1.0 + 1e-9):
        a = _block_v_le(-1.0, 3.0, v)
        b = _block_v_gt(-1.0, 3.0, v)
        assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-9
    report(9, f"osculation invariants hold; worst residual {worst:.2e}")


def test_criterion_10_smoothing_constants():
    from scipy import integrate as sci
    d1 = 0.0
    for lo, hi in [(-np.inf, 0.0), (0.0, np.inf)]:
        val, _ = sci.quad(lambda x: abs(x) * math.exp(-x * x / 2) / SQRT_2PI,
                          lo, hi, limit=300)
        d1 += val
    d2 = 0.0
    for lo, hi in [(-np.inf, -1.0), (-1.0, 1.0), (1.0, np.inf)]:
        val, _ = sci.quad(
            lambda x: abs(x * x - 1) * math.exp(-x * x / 2) / SQRT_2PI,
            lo, hi, limit=300)
        d2 += val
    got1 = zf.smoothing_constant(3.0, 1.0)
    got2 = zf.smoothing_constant(3.0, 2.0)
    assert abs(got1 - d1) <= 1e-10
    assert abs(got2 - d2) <= 1e-10
    assert abs(got1 - 2.0 / SQRT_2PI) <= 1e-10
    assert abs(got2 - 4.0 / math.sqrt(2.0 * math.pi * math.e)) <= 1e-10
    report(10, f"C(s,1) = {got1:.12f}, C(s,2) = {got2:.12f} match quadrature")


def test_criterion_11_metric_property_suites():
    rng = np.random.default_rng(314159)
    t0 = time.perf_counter()
    for i in range(200):
        p = random_standardized(rng, 3, 5)
        q = random_standardized(rng, 3, 5)
        r = random_standardized(rng, 3, 5)
        # metric axioms
        assert zf.zeta_discrete(p, p, 3) == 0.0
        d_pq = zf.zeta_discrete(p, q, 3)
        assert d_pq > 0.0
        assert d_pq == pytest.approx(zf.zeta_discrete(q, p, 3), rel=1e-12)
        assert d_pq <= zf.zeta_discrete(p, r, 3) \
            + zf.zeta_discrete(r, q, 3) + 1e-9
    for i in range(200):
        p = random_standardized(rng, 3, 4)
        q = random_standardized(rng, 3, 4)
        r = random_standardized(rng, 3, 4)
        base = zf.zeta_discrete(p, q, 3)
        # regularity under common convolution
        conv = zf.zeta_discrete(zf.convolve([p, r]), zf.convolve([q, r]), 3)
        assert conv <= base + 1e-9
        # cubic homogeneity under scaling
        a = 0.5 if i % 2 else 2.0
        scaled = zf.zeta_discrete(zf.scale_law(p, a), zf.scale_law(q, a), 3)
        assert scaled == pytest.approx(a ** 3 * base, rel=1e-9)
    elapsed = time.perf_counter() - t0
    report(11, f"metric/regularity/homogeneity suites (200 each) "
               f"in {elapsed:.1f}s")


def test_criterion_12_decomposition():
    from test_reduction import reconstruct
    rng = np.random.default_rng(271828)
    funcs_pool = [lambda x: x, lambda x: x ** 2, lambda x: np.abs(x) ** 3]
    for i in range(100):
        k = int(rng.integers(1, 4))
        law = random_standardized(rng, 4, 9)
        dec = zf.extreme_point_decompose(law, funcs_pool[:k])
        merged = reconstruct(dec)
        assert len(merged) == law.n_atoms
        for (x, m), (ax, am) in zip(merged, zip(law.atoms, law.masses)):
            assert abs(x - float(ax)) <= 1e-10
            assert abs(m - float(am)) <= 1e-10
        for f in funcs_pool[:k]:
            want = float(np.dot(law.masses, np.asarray(f(law.atoms))))
            for part in dec.parts:
                assert part.n_atoms <= k + 1
                got = float(np.dot(part.masses, np.asarray(f(part.atoms))))
                assert abs(got - want) <= 1e-9
    report(12, "100 decompositions reconstruct and preserve constraints")
