"""Closed-form real root isolation and integration for polynomials of degree <= 3.

Coefficients are ascending: c[r] multiplies x**r.  Degree-2 roots use the
numerically stable quadratic formula; degree-3 roots use the depressed-cubic
trigonometric solution (three real roots) or Cardano (one real root), and
every closed-form root is polished by two Newton steps on the original
polynomial.  Tangential double roots produced by osculating curves are the
reason for the polish-then-merge sequence: the closed forms can be off by
~sqrt(eps) there, which is harmless after merging.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

_TWO_PI_3 = 2.0 * math.pi / 3.0


def eval_poly(c: Sequence[float], x: float) -> float:
    """Horner evaluation of sum c[r] * x**r."""
    acc = 0.0
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def eval_poly_vec(c: Sequence[float], x: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(np.asarray(x, dtype=float))
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def derivative(c: Sequence[float]) -> list[float]:
    return [r * c[r] for r in range(1, len(c))]


def integrate(c: Sequence[float], a: float, b: float) -> float:
    """Exact integral of the polynomial over [a, b] via the antiderivative."""
    acc = 0.0
    pa = 1.0
    pb = 1.0
    for r, coef in enumerate(c):
        acc += coef * (pb * b - pa * a) / (r + 1)
        pa *= a
        pb *= b
    return acc


def _newton_polish(c: Sequence[float], x: float, steps: int = 2) -> float:
    dc = derivative(c)
    for _ in range(steps):
        d = eval_poly(dc, x)
        if d == 0.0:
            break
        x -= eval_poly(c, x) / d
    return x


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _roots_linear(c1: float, c0: float) -> list[float]:
    if c1 == 0.0:
        return []
    return [-c0 / c1]


def _roots_quadratic(c2: float, c1: float, c0: float) -> list[float]:
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0.0:
        # A tangential (double) root pushed slightly complex by rounding has
        # no sign change, so dropping it never mis-splits an integral.
        return []
    sq = math.sqrt(disc)
    q = -0.5 * (c1 + math.copysign(sq, c1) if c1 != 0.0 else c1 + sq)
    if q == 0.0:
        return [0.0] if c0 == 0.0 else []
    roots = [q / c2]
    if q != 0.0:
        roots.append(c0 / q)
    return roots


def _roots_cubic(c3: float, c2: float, c1: float, c0: float) -> list[float]:
    a = c2 / c3
    b = c1 / c3
    c = c0 / c3
    # depress: x = y - a/3  ->  y^3 + p y + q
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    shift = -a / 3.0
    disc = 0.25 * q * q + p ** 3 / 27.0
    if disc > 0.0:
        sq = math.sqrt(disc)
        # avoid cancellation: take the cube root of the larger-magnitude branch
        u3 = -0.5 * q - math.copysign(sq, q)
        u = _cbrt(u3)
        v = 0.0 if u == 0.0 else -p / (3.0 * u)
        return [u + v + shift]
    if p >= 0.0:
        # disc <= 0 and p >= 0 forces p ~ q ~ 0: triple root
        return [shift]
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * m)
    arg = min(1.0, max(-1.0, arg))
    theta = math.acos(arg) / 3.0
    return [m * math.cos(theta - _TWO_PI_3 * k) + shift for k in range(3)]


def real_roots(
    c: Sequence[float],
    lo: float,
    hi: float,
    merge_tol: float | None = None,
) -> list[float]:
    """Sorted real roots of the polynomial strictly inside (lo, hi).

    The closed forms run at the polynomial's *effective* degree on the
    window: a leading coefficient whose contribution |c_r| * T^r
    (T = max(1, |lo|, |hi|)) is below 1e-10 of the dominant one is treated
    as a perturbation.  Otherwise a roundoff-level cubic term on top of a
    healthy quadratic sends the depressed-cubic shift to ~c2/(3 c3) and
    destroys every digit.  Newton polishing always runs against the full
    polynomial, so the truncation costs no accuracy; any root the
    truncation hides has modulus >= (1e10)^(1/deg) * T and lies far
    outside the window.  Roots closer than ``merge_tol`` (default
    1e-13 * (hi - lo)) are merged to their midpoint.
    """
    c = [float(v) for v in c]
    t_scale = max(1.0, abs(lo), abs(hi))
    weights = [abs(v) * t_scale ** r for r, v in enumerate(c)]
    scale = max(weights, default=0.0)
    if scale == 0.0:
        return []
    deg = len(c) - 1
    while deg > 0 and weights[deg] <= 1e-10 * scale:
        deg -= 1
    if deg <= 0:
        return []
    if deg == 1:
        raw = _roots_linear(c[1], c[0])
    elif deg == 2:
        raw = _roots_quadratic(c[2], c[1], c[0])
    else:
        raw = _roots_cubic(c[3], c[2], c[1], c[0])
    polished = sorted(_newton_polish(c, x, steps=3) for x in raw)
    if merge_tol is None:
        merge_tol = 1e-13 * (hi - lo)
    merged: list[float] = []
    for x in polished:
        if merged and x - merged[-1] <= merge_tol:
            merged[-1] = 0.5 * (merged[-1] + x)
        else:
            merged.append(x)
    return [x for x in merged if lo < x < hi]
