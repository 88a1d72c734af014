"""Extremal two-point quantities and the classical constant catalog.

Among standardized laws with third absolute moment rho >= 1, the maximum of
|mu_3| equals

    B(rho) = sqrt(rho^2/2 + rho*sqrt(rho^2+8)/2 - 2),

attained (up to reflection) by a unique two-point law with mass

    p(rho) = 1/2 - 1/2 * sqrt(rho*sqrt(rho^2+8)/2 - rho^2/2 - 1)

at the positive atom sqrt(q/p), q = 1 - p, and span h = 1/sqrt(pq).
A(rho) = B(rho)/rho lies in [0, 1).

The radicands above cancel catastrophically near rho = 1 (where
B ~ sqrt(8/3*(rho-1))), so everything here is evaluated through conjugate
rewrites that are exact in real arithmetic and stable in float64:

    B(rho)^2            = 8*(rho^2-1) / (rho*sqrt(rho^2+8) + 4 - rho^2)
    (q - p)^2           = 2*(rho^2-1) / (rho*sqrt(rho^2+8) + rho^2 + 2)
    h(rho)              = (rho + sqrt(rho^2+8)) / 2
    rho*sqrt(rho^2+8) - rho^2 = 8*rho^2 / (rho*sqrt(rho^2+8) + rho^2)

The denominators stay in [6, 8] for all rho >= 1, so no extended-precision
fallback is needed anywhere on [1, inf).

The g-catalog (g0, g1 = C_E*rho, g2) collects the classical
Kolmogorov-metric envelope functions; it is a catalog only, no uniform-metric
distances are computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadInput, BadRho

SQRT_2PI = math.sqrt(2.0 * math.pi)

#: asymptotically best linear constant (sqrt(10)+3)/(6 sqrt(2 pi)) = 0.4097...
C_E = (math.sqrt(10.0) + 3.0) / (6.0 * SQRT_2PI)

#: rho at which g1 = C_E*rho touches the lower envelope, = 1.0401...
RHO_E = math.sqrt(20.0 * (math.sqrt(10.0) - 3.0) / 3.0)

#: rho at which g2 touches the lower envelope, = 1.2185...
RHO_0 = 3.0 ** 0.25 * (4.0 - math.sqrt(3.0)) / math.sqrt(6.0)

#: two-point mass corresponding to RHO_E, = (4 - sqrt(10))/2 = 0.4188...
P_E = (4.0 - math.sqrt(10.0)) / 2.0


@dataclass(frozen=True)
class ExtremalParams:
    """The quadruple (p, h, B, A) attached to a given rho >= 1."""

    rho: float
    p: float
    h: float
    B: float
    A: float


@dataclass(frozen=True)
class ClassicalConstants:
    C_E: float
    rho_E: float
    rho_0: float
    p_E: float


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if not rho >= 1.0:
        raise BadRho(f"rho must be >= 1, got {rho}")
    return rho


def b_value(rho: float) -> float:
    """B(rho), the maximal |mu_3| over standardized laws with nu_3 = rho."""
    rho = _check_rho(rho)
    s8 = math.sqrt(rho * rho + 8.0)
    return math.sqrt(8.0 * (rho * rho - 1.0) / (rho * s8 + 4.0 - rho * rho))


def a_value(rho: float) -> float:
    """A(rho) = B(rho)/rho; increases from 0 to 1 on [1, inf)."""
    rho = _check_rho(rho)
    return b_value(rho) / rho


def two_point_mass(rho: float) -> float:
    """Mass p in (0, 1/2] of the positive atom of the extremal two-point law."""
    rho = _check_rho(rho)
    s8 = math.sqrt(rho * rho + 8.0)
    e2 = rho * s8 + rho * rho + 2.0
    under = 2.0 * (rho * rho - 1.0) / e2  # = (q - p)^2
    # 1 - under rewritten without cancellation for large rho
    one_minus = (8.0 * rho * rho / (rho * s8 + rho * rho) + 4.0) / e2
    return one_minus / (2.0 * (1.0 + math.sqrt(under)))


def span_value(rho: float) -> float:
    """Lattice span h(rho) = 1/sqrt(pq) = (rho + sqrt(rho^2+8))/2."""
    rho = _check_rho(rho)
    return 0.5 * (rho + math.sqrt(rho * rho + 8.0))


def extremal_params(rho: float) -> ExtremalParams:
    """All four extremal quantities, mutually consistent to ~1e-15."""
    rho = _check_rho(rho)
    b = b_value(rho)
    return ExtremalParams(rho=rho, p=two_point_mass(rho), h=span_value(rho),
                          B=b, A=b / rho)


def classical_constants() -> ClassicalConstants:
    return ClassicalConstants(C_E=C_E, rho_E=RHO_E, rho_0=RHO_0, p_E=P_E)


def g_function(which: str, rho: float) -> float:
    """Catalog of classical envelope functions g0, g1, g2 at rho >= 1.

    g0(rho) = (B(rho) + 3*h(rho)) / (6*sqrt(2*pi)); g1(rho) = C_E*rho;
    g2(rho) = 2*rho/(3*sqrt(2*pi)) + sqrt((2*sqrt(3)-3)/(6*pi)).
    """
    rho = _check_rho(rho)
    if which == "g0":
        return (b_value(rho) + 3.0 * span_value(rho)) / (6.0 * SQRT_2PI)
    if which == "g1":
        return C_E * rho
    if which == "g2":
        return 2.0 * rho / (3.0 * SQRT_2PI) + math.sqrt(
            (2.0 * math.sqrt(3.0) - 3.0) / (6.0 * math.pi))
    raise BadInput(f"unknown g-function {which!r}; expected g0, g1 or g2")
