"""Two-point Hermite interpolation and the cubic osculatory majorant.

The central object: for r != 0 and u > v >= 0, the function

    g(x) = a + b*x + c*x^2 + d*|x|^3

that osculates f(x) = |x - r|^3 (value and first derivative) at the two
points s = v*sgn(r) and t = -u*sgn(r) dominates f on all of R, strictly
off {s, t} unless v = 0 (in which case g coincides with f on the whole
half-line on the r side).  Taking expectations turns the pointwise bound
into a recentered third-absolute-moment inequality

    E|X - r|^3 <= a + b*EX + c*EX^2 + d*E|X|^3,

with equality exactly for laws concentrated on {s, t}.

The coefficients have two closed-form branches (v <= |r| and v > |r|).
The v > |r| block is long; it is transcribed once and validated by the
four interpolation conditions rather than trusted, so a transcription
slip fails the invariant checks immediately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _poly
from .errors import BadRange, CoincidentNodes, IllConditioned
from .laws import DiscreteLaw


@dataclass(frozen=True)
class HermitePoly:
    """Polynomial matching prescribed derivatives at two nodes."""

    coeffs: np.ndarray          # ascending powers
    x0: float
    x1: float
    y0: tuple[float, ...]
    y1: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return _poly.eval_poly_vec(self.coeffs, np.asarray(x, dtype=float)) \
            if np.ndim(x) else _poly.eval_poly(self.coeffs, float(x))

    def derivative(self, order: int = 1) -> "np.ndarray":
        c = list(self.coeffs)
        for _ in range(order):
            c = _poly.derivative(c)
        return np.asarray(c, dtype=float)


def hermite_two_point(x0: float, x1: float, y0: Sequence[float],
                      y1: Sequence[float]) -> HermitePoly:
    """Unique polynomial of degree <= m0+m1+1 with p^(j)(x_i) = y_{i,j}.

    Solved through the confluent Vandermonde system; nodes closer than
    1e-10 * max(1, |x0|, |x1|) are rejected as ill-conditioned.
    """
    x0 = float(x0)
    x1 = float(x1)
    if x0 == x1:
        raise CoincidentNodes(f"nodes coincide at {x0}")
    if abs(x1 - x0) < 1e-10 * max(1.0, abs(x0), abs(x1)):
        raise IllConditioned(f"nodes {x0} and {x1} too close to solve")
    y0 = tuple(float(v) for v in y0)
    y1 = tuple(float(v) for v in y1)
    n = len(y0) + len(y1)
    rows = []
    rhs = []
    for x, ys in ((x0, y0), (x1, y1)):
        for j, val in enumerate(ys):
            row = np.zeros(n)
            for r in range(j, n):
                row[r] = math.perm(r, j) * x ** (r - j)
            rows.append(row)
            rhs.append(val)
    coeffs = np.linalg.solve(np.array(rows), np.array(rhs))
    return HermitePoly(coeffs=coeffs, x0=x0, x1=x1, y0=y0, y1=y1)


@dataclass(frozen=True)
class OsculCoeffs:
    """Coefficients of the osculatory majorant a + b x + c x^2 + d |x|^3."""

    a: float
    b: float
    c: float
    d: float
    r: float
    u: float
    v: float
    branch: str  # "v_le_abs_r" | "v_gt_abs_r"

    @property
    def touch_points(self) -> tuple[float, float]:
        """The osculation nodes (s, t) = (v*sgn(r), -u*sgn(r))."""
        sg = math.copysign(1.0, self.r)
        return (self.v * sg, -self.u * sg)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = self.a + self.b * x + self.c * x * x + self.d * np.abs(x) ** 3
        return out if out.ndim else float(out)


def _block_v_le(r: float, u: float, v: float):
    ar = abs(r)
    sg = math.copysign(1.0, r)
    w = (u - v) * (u * u + 4.0 * u * v + v * v)
    a = ar ** 3 + 4.0 * u ** 3 * v ** 3 / w
    b = -sg * (3.0 * r * r + 6.0 * u * u * v * v
               / (u * u + 4.0 * u * v + v * v))
    c = 3.0 * ar - 12.0 * u * u * v * v / w
    d = (u + v) ** 3 / w
    return a, b, c, d


def _block_v_gt(r: float, u: float, v: float):
    ar = abs(r)
    r2 = r * r
    upv = u + v
    umv = u - v
    quad = u * u + 4.0 * u * v + v * v
    a = ar * (6.0 * u ** 4 * v ** 2 + 6.0 * u ** 2 * v ** 4
              + 12.0 * u ** 3 * v ** 2 * ar - 12.0 * u ** 2 * v ** 3 * ar
              - 4.0 * u ** 3 * v * r2 - 4.0 * u * v ** 3 * r2
              - u ** 4 * r2 - v ** 4 * r2 + 6.0 * u ** 2 * v ** 2 * r2) \
        / (umv * upv * quad)
    b = 3.0 * r * (-4.0 * u * u * v * v - 4.0 * u ** 3 * v
                   - 4.0 * u * v ** 3 - 3.0 * u * u * v * ar
                   + 3.0 * u * v * v * ar + u ** 3 * ar - v ** 3 * ar
                   - 4.0 * u * v * r2) / (upv * quad)
    c = 3.0 * ar * (u ** 4 + v ** 4 - 6.0 * u * u * v * v
                    - 4.0 * u ** 3 * v - 4.0 * u * v ** 3
                    + 4.0 * u ** 3 * ar - 4.0 * v ** 3 * ar
                    + 2.0 * u * u * r2 + 2.0 * v * v * r2) \
        / (umv * upv * quad)
    d = (u - v + 2.0 * ar) * (u * u + v * v + 4.0 * u * v
                              - 2.0 * u * ar + 2.0 * v * ar - 2.0 * r2) \
        / (umv * quad)
    return a, b, c, d


def oscul_coeffs(r: float, u: float, v: float) -> OsculCoeffs:
    """Closed-form coefficients of the majorant of |x - r|^3.

    Branch selected by v <= |r| versus v > |r|; validity u > v >= 0, r != 0.
    The two blocks agree at the junction v = |r|.
    """
    r = float(r)
    u = float(u)
    v = float(v)
    if r == 0.0 or not (u > v >= 0.0):
        raise BadRange(f"need r != 0 and u > v >= 0, got r={r}, u={u}, v={v}")
    if v <= abs(r):
        a, b, c, d = _block_v_le(r, u, v)
        branch = "v_le_abs_r"
    else:
        a, b, c, d = _block_v_gt(r, u, v)
        branch = "v_gt_abs_r"
    return OsculCoeffs(a=a, b=b, c=c, d=d, r=r, u=u, v=v, branch=branch)


def _diff_tail_coeffs(co: OsculCoeffs, side: int) -> list[float]:
    """Ascending coefficients of g - |x-r|^3 on the outer piece of a side.

    side +1: x > max(0, r); side -1: x < min(0, r).  On those half-lines
    both |x| and |x - r| are sign-definite, so the difference is a cubic.
    """
    r = co.r
    if side > 0:
        # |x|^3 = x^3, |x-r|^3 = (x-r)^3
        return [co.a + r ** 3, co.b - 3.0 * r * r, co.c + 3.0 * r, co.d - 1.0]
    # |x|^3 = -x^3, |x-r|^3 = -(x-r)^3
    return [co.a - r ** 3, co.b + 3.0 * r * r, co.c - 3.0 * r, 1.0 - co.d]


def _tail_nonnegative(coeffs: list[float], side: int) -> bool:
    """Sign of a polynomial at side*infinity is >= 0 (or it vanishes)."""
    scale = max((abs(c) for c in coeffs), default=0.0)
    if scale == 0.0:
        return True
    for k in range(len(coeffs) - 1, -1, -1):
        if abs(coeffs[k]) > 1e-12 * scale:
            lim = coeffs[k] * (1.0 if side > 0 else (-1.0) ** k)
            return lim > 0.0
    return True


def dominance_check(co: OsculCoeffs, grid: tuple[float, float, int] | None = None
                    ) -> bool:
    """Grid certificate that g dominates |x - r|^3.

    True iff g - f >= -1e-10 on the grid, the analytic tail signs are
    nonnegative on both sides, and (when v > 0) near-equality (<= 1e-8)
    occurs only inside the zones the double zeros at the two osculation
    nodes explain: the difference behaves like kappa (x - node)^2 there,
    so each zone's radius is sqrt(2e-8 / diff'') plus grid slack.  As
    v -> 0 the curvature at the r-side node vanishes and the zone widens
    into the half-line where g coincides with f; with v = 0 exactly the
    locality clause is waived.
    """
    s_node, t_node = co.touch_points
    if grid is None:
        pad = 3.0 * abs(co.r) + 3.0
        grid = (min(s_node, t_node) - pad, max(s_node, t_node) + pad, 10_001)
    lo, hi, count = grid
    xs = np.linspace(lo, hi, int(count))

    def diff_at(x):
        return co(x) - np.abs(np.asarray(x, dtype=float) - co.r) ** 3

    diff = diff_at(xs)
    if float(np.min(diff)) < -1e-10:
        return False
    if not (_tail_nonnegative(_diff_tail_coeffs(co, +1), +1)
            and _tail_nonnegative(_diff_tail_coeffs(co, -1), -1)):
        return False
    if co.v > 0.0:
        step = (hi - lo) / (int(count) - 1)
        near = np.abs(diff) <= 1e-8
        ok = np.zeros_like(near)
        for node in (s_node, t_node):
            h = max(10.0 * step, 1e-4)
            second = (float(diff_at(node + h)) + float(diff_at(node - h))) \
                / (h * h)
            radius = math.sqrt(2e-8 / max(second, 1e-12)) + 2.0 * step
            ok |= np.abs(xs - node) <= radius
        if bool(np.any(near & ~ok)):
            return False
    return True


@dataclass(frozen=True)
class RecenteredBound:
    lhs: float
    rhs: float
    tight: bool


def recentered_abs3_bound(law: DiscreteLaw, r: float, u: float,
                          v: float) -> RecenteredBound:
    """E|X - r|^3 versus its moment majorant a + b m1 + c m2 + d nu3.

    ``tight`` is set when the law is concentrated on the two osculation
    nodes, which is exactly the equality case.
    """
    co = oscul_coeffs(r, u, v)
    lhs = float(np.dot(law.masses, np.abs(law.atoms - co.r) ** 3))
    rhs = co.a + co.b * law.raw_moment(1) + co.c * law.raw_moment(2) \
        + co.d * law.abs_moment(3.0)
    s_node, t_node = co.touch_points
    nodes = np.array(sorted((s_node, t_node)))
    tight = law.n_atoms <= 2 and all(
        np.min(np.abs(nodes - x)) <= 1e-12 * max(1.0, abs(x))
        for x in law.atoms)
    return RecenteredBound(lhs=lhs, rhs=rhs, tight=tight)
