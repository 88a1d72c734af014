import numpy as np
import pytest

import zetaforge as zf
from conftest import random_standardized
from zetaforge.errors import BadRange, CoincidentNodes, IllConditioned
from zetaforge.osculation import _block_v_gt, _block_v_le


def rand_params(rng, branch):
    r = float(rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0]))
    if branch == "le":
        v = float(rng.uniform(0.0, abs(r)))
    else:
        v = float(rng.uniform(abs(r) * (1 + 1e-6), abs(r) + 2.0))
    u = v + float(rng.uniform(0.05, 3.0))
    return r, u, v


def interp_residual(co):
    """Max violation of the four osculation conditions at the nodes."""
    f = lambda x: abs(x - co.r) ** 3
    fp = lambda x: 3.0 * (x - co.r) * abs(x - co.r)
    gp = lambda x: co.b + 2.0 * co.c * x + 3.0 * co.d * x * abs(x)
    s, t = co.touch_points
    scale = max(1.0, abs(f(s)), abs(f(t)))
    return max(abs(co(s) - f(s)), abs(gp(s) - fp(s)),
               abs(co(t) - f(t)), abs(gp(t) - fp(t))) / scale


class TestHermiteTwoPoint:
    def test_cubic_reproduced(self):
        # values/derivatives of x^3 at 0 and 1
        hp = zf.hermite_two_point(0.0, 1.0, [0.0, 0.0], [1.0, 3.0])
        assert hp.coeffs == pytest.approx([0.0, 0.0, 0.0, 1.0], abs=1e-12)

    def test_positivity_inside(self, rng):
        # y0 >= 0, y1 with alternating signs: p > 0 strictly inside
        for _ in range(20):
            y0 = rng.uniform(0.0, 2.0, size=2)
            y1 = rng.uniform(0.0, 2.0, size=2) * np.array([1.0, -1.0])
            if not (y0.any() or y1.any()):
                continue
            hp = zf.hermite_two_point(0.0, 1.0, y0, y1)
            xs = np.linspace(1e-3, 1.0 - 1e-3, 100)
            assert np.all(hp(xs) > 0.0)

    def test_linearity(self, rng):
        x0, x1 = -0.7, 1.3
        y0 = rng.uniform(-1, 1, size=3)
        y1 = rng.uniform(-1, 1, size=2)
        full = zf.hermite_two_point(x0, x1, y0, y1)
        left = zf.hermite_two_point(x0, x1, y0, np.zeros(2))
        right = zf.hermite_two_point(x0, x1, np.zeros(3), y1)
        assert full.coeffs == pytest.approx(
            (left.coeffs + right.coeffs).tolist(), abs=1e-9)

    def test_change_of_variables(self, rng):
        x0, x1 = 0.4, 2.9
        y0 = rng.uniform(-1, 1, size=2)
        y1 = rng.uniform(-1, 1, size=2)
        h = x1 - x0
        native = zf.hermite_two_point(x0, x1, y0, y1)
        unit = zf.hermite_two_point(0.0, 1.0, [y0[0], h * y0[1]],
                                    [y1[0], h * y1[1]])
        for x in np.linspace(x0 - 1, x1 + 1, 50):
            assert native(x) == pytest.approx(unit((x - x0) / h), abs=1e-9)

    def test_derivative_bound_regression(self, rng):
        # sup |p^(k)| <= c * ||y||_inf * (1 v h^m) / h^k for a fitted c:
        # fit on one batch, then assert with 4x headroom on a fresh batch
        def ratio(x0, x1, y0, y1, k):
            hp = zf.hermite_two_point(x0, x1, y0, y1)
            c = hp.coeffs
            for _ in range(k):
                c = np.polynomial.polynomial.polyder(c)
            xs = np.linspace(x0, x1, 200)
            sup = np.max(np.abs(
                np.polynomial.polynomial.polyval(xs, c))) if len(c) else 0.0
            h = abs(x1 - x0)
            norm = max(np.max(np.abs(y0)), np.max(np.abs(y1)))
            return sup * h ** k / (norm * max(1.0, h))

        def batch():
            out = []
            for _ in range(40):
                x0 = float(rng.uniform(-2, 2))
                x1 = x0 + float(rng.uniform(0.1, 3.0))
                y0 = rng.uniform(-1, 1, size=2)
                y1 = rng.uniform(-1, 1, size=2)
                out.append(max(ratio(x0, x1, y0, y1, k) for k in (0, 1, 2)))
            return out

        fitted = max(batch())
        assert max(batch()) <= 4.0 * fitted

    def test_errors(self):
        with pytest.raises(CoincidentNodes):
            zf.hermite_two_point(1.0, 1.0, [0.0], [0.0])
        with pytest.raises(IllConditioned):
            zf.hermite_two_point(1.0, 1.0 + 1e-12, [0.0], [0.0])


class TestOsculCoeffs:
    def test_figure_parameters(self):
        co = zf.oscul_coeffs(-1.0, 1.5, 2.0 / 3.0)
        assert co.d == pytest.approx(2197.0 / 1205.0, rel=1e-14)
        assert co.branch == "v_le_abs_r"
        assert interp_residual(co) < 1e-12

    def test_v_zero_collapse(self):
        co = zf.oscul_coeffs(-1.0, 2.0, 0.0)
        assert (co.a, co.b, co.c, co.d) == pytest.approx((1.0, 3.0, 3.0, 1.0))

    def test_branch_agreement_at_junction(self):
        # both closed-form blocks evaluate to the same coefficients at
        # v = |r| and within 1e-9 of each other for v = |r| +/- 1e-9
        for v in (1.0 - 1e-9, 1.0, 1.0 + 1e-9):
            a = _block_v_le(-1.0, 3.0, v)
            b = _block_v_gt(-1.0, 3.0, v)
            assert max(abs(x - y) for x, y in zip(a, b)) < 1e-9

    def test_interpolation_invariants_both_branches(self, rng):
        for branch in ("le", "gt"):
            for _ in range(100):
                r, u, v = rand_params(rng, branch)
                co = zf.oscul_coeffs(r, u, v)
                assert interp_residual(co) < 1e-9

    def test_d_nonnegative_on_le_branch(self, rng):
        for _ in range(50):
            r, u, v = rand_params(rng, "le")
            assert zf.oscul_coeffs(r, u, v).d >= 1.0 - 1e-12

    def test_bad_range(self):
        with pytest.raises(BadRange):
            zf.oscul_coeffs(0.0, 1.0, 0.5)
        with pytest.raises(BadRange):
            zf.oscul_coeffs(-1.0, 0.5, 0.5)
        with pytest.raises(BadRange):
            zf.oscul_coeffs(-1.0, 1.0, -0.1)


class TestDominance:
    def test_figure_parameters(self):
        co = zf.oscul_coeffs(-1.0, 1.5, 2.0 / 3.0)
        assert zf.dominance_check(co)
        # equality exactly at s = -2/3 and t = 3/2
        s, t = co.touch_points
        assert (s, t) == pytest.approx((-2.0 / 3.0, 1.5))
        assert co(s) - abs(s - co.r) ** 3 == pytest.approx(0.0, abs=1e-12)
        assert co(t) - abs(t - co.r) ** 3 == pytest.approx(0.0, abs=1e-12)

    def test_v_zero_case(self):
        # g coincides with f on a half-line; dominance still holds
        co = zf.oscul_coeffs(-1.0, 2.0, 0.0)
        assert zf.dominance_check(co)

    def test_random_instances(self, rng):
        for branch in ("le", "gt"):
            for _ in range(50):
                r, u, v = rand_params(rng, branch)
                assert zf.dominance_check(zf.oscul_coeffs(r, u, v))


class TestDSignCriterion:
    def test_d_sign_matches_cubic_criterion(self, rng):
        # osculant of A + Bx + Cx^2 + Dx^3 at s, t with st < 0:
        # f <= g on R iff d >= 0 iff D*(s+t) >= 0
        for _ in range(50):
            coefs = rng.uniform(-2, 2, size=4)
            s = float(-rng.uniform(0.1, 2.0))
            t = float(rng.uniform(0.1, 2.0))
            if abs(abs(s) - abs(t)) < 1e-3 or abs(coefs[3]) < 1e-3:
                continue
            a, b, c, d = _solve_cubic_osculant(coefs, s, t)
            xs = np.linspace(-6, 6, 2001)
            f = np.polynomial.polynomial.polyval(xs, coefs)
            g = a + b * xs + c * xs ** 2 + d * np.abs(xs) ** 3
            below = bool(np.all(f <= g + 1e-9))
            assert below == (d >= -1e-12)
            assert below == (coefs[3] * (s + t) >= -1e-12)


def _solve_cubic_osculant(coefs, s, t):
    """Solve for a+bx+cx^2+d|x|^3 matching f, f' at s and t (test-local)."""
    der = np.polynomial.polynomial.polyder(coefs)
    rows, rhs = [], []
    for x in (s, t):
        rows.append([1.0, x, x * x, abs(x) ** 3])
        rhs.append(np.polynomial.polynomial.polyval(x, coefs))
        rows.append([0.0, 1.0, 2.0 * x, 3.0 * x * abs(x)])
        rhs.append(np.polynomial.polynomial.polyval(x, der))
    return np.linalg.solve(np.array(rows), np.array(rhs))


class TestOsculationWithConvexSecondDerivative:
    def test_double_contact_quartics_are_nonnegative(self, rng):
        # f = c (x-s)^2 (x-t)^2 has convex f'' and osculates zero twice
        for _ in range(20):
            s = float(rng.uniform(-2, 0))
            t = float(rng.uniform(0.3, 2))
            c = float(rng.uniform(0.1, 3.0))
            xs = np.linspace(-5, 5, 1001)
            f = c * (xs - s) ** 2 * (xs - t) ** 2
            assert np.all(f >= 0.0)


class TestRecenteredBound:
    def test_equality_on_node_support(self):
        co = zf.oscul_coeffs(-1.0, 1.5, 2.0 / 3.0)
        s, t = co.touch_points
        law = zf.make_discrete([(s, 0.4), (t, 0.6)])
        res = zf.recentered_abs3_bound(law, -1.0, 1.5, 2.0 / 3.0)
        assert res.lhs == pytest.approx(res.rhs, abs=1e-12)
        assert res.tight

    def test_rademacher_strict(self):
        res = zf.recentered_abs3_bound(zf.rademacher(), -1.0, 1.5, 2.0 / 3.0)
        assert res.lhs < res.rhs - 1e-6
        assert not res.tight

    def test_random_laws_and_parameters(self, rng):
        for _ in range(100):
            branch = "le" if rng.integers(2) else "gt"
            r, u, v = rand_params(rng, branch)
            law = random_standardized(rng)
            res = zf.recentered_abs3_bound(law, r, u, v)
            assert res.lhs <= res.rhs + 1e-10
