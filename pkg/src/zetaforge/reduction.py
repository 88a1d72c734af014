"""Constructive few-point reduction under moment constraints.

Any finitely supported law decomposes as a convex combination of laws on
at most k+1 of its support points, all matching the k prescribed
functional values (extreme points of the constraint polytope).  The
decomposition is built by repeatedly moving along a null direction of the
constraint matrix to the boundary of the simplex, which strictly shrinks
the support of each part and therefore terminates.

On top of it sits a numerical certificate for the sharpness of the
two-point bound: over standardized three-point laws with nu_3 = rho, a
grid scan with local refinement of zeta_3(P, Rademacher) stays below
B(rho)/6, which is attained in the degenerate two-point corner.  This is
a certificate at grid resolution, not a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import optimize as _optimize

from .errors import (BadRho, BoundViolation, InfeasibleParameters,
                     NumericalRankFailure)
from .extremal import b_value
from .laws import DiscreteLaw, rademacher, two_point_law
from .zeta import zeta_discrete

_SV_TOL = 1e-10


@dataclass(frozen=True)
class ConvexDecomposition:
    """Weights and parts with sum(weights * parts) = the original law."""

    weights: tuple[float, ...]
    parts: tuple[DiscreteLaw, ...]


def _null_direction(atoms: np.ndarray, constraints) -> np.ndarray:
    rows = [np.ones_like(atoms)]
    rows.extend(np.asarray(f(atoms), dtype=float) for f in constraints)
    a = np.vstack(rows)
    _, svals, vh = np.linalg.svd(a, full_matrices=True)
    direction = vh[-1]
    residual = float(np.linalg.norm(a @ direction))
    if residual > _SV_TOL * max(1.0, float(svals[0])):
        raise NumericalRankFailure(
            f"null direction residual {residual:.3e} exceeds tolerance")
    return direction


def _split_once(atoms: np.ndarray, masses: np.ndarray, constraints):
    """One extreme-point split; both children lose at least one atom."""
    r = _null_direction(atoms, constraints)
    pos = r > 0.0
    neg = r < 0.0
    # largest steps keeping masses >= 0 in both directions
    j_plus = np.flatnonzero(neg)[np.argmin(masses[neg] / -r[neg])]
    j_minus = np.flatnonzero(pos)[np.argmin(masses[pos] / r[pos])]
    eps_plus = masses[j_plus] / -r[j_plus]
    eps_minus = masses[j_minus] / r[j_minus]
    lam_plus = eps_minus / (eps_plus + eps_minus)

    def child(step: float, kill: int):
        m = masses + step * r
        m[kill] = 0.0
        keep = m > 1e-15
        return atoms[keep], m[keep] / m[keep].sum()

    return ((lam_plus, child(eps_plus, j_plus)),
            (1.0 - lam_plus, child(-eps_minus, j_minus)))


def extreme_point_decompose(law: DiscreteLaw,
                            constraints: Sequence[Callable]) -> ConvexDecomposition:
    """Decompose into parts on <= k+1 atoms matching all k constraints.

    Constraint functions must accept numpy arrays (e.g. lambda x: x**2).
    """
    k = len(constraints)
    stack = [(1.0, law.atoms.copy(), law.masses.copy())]
    weights: list[float] = []
    parts: list[DiscreteLaw] = []
    while stack:
        w, atoms, masses = stack.pop()
        if len(atoms) <= k + 1:
            weights.append(w)
            parts.append(DiscreteLaw(atoms, masses))
            continue
        for lam, (a2, m2) in _split_once(atoms, masses, constraints):
            if lam > 0.0:
                stack.append((w * lam, a2, m2))
    return ConvexDecomposition(weights=tuple(weights), parts=tuple(parts))


def richter_reduce(law: DiscreteLaw,
                   constraints: Sequence[Callable]) -> DiscreteLaw:
    """A single law on <= k+1 support points matching all constraints."""
    k = len(constraints)
    atoms, masses = law.atoms.copy(), law.masses.copy()
    while len(atoms) > k + 1:
        (lam, (a_p, m_p)), (_, (a_m, m_m)) = _split_once(atoms, masses,
                                                         constraints)
        atoms, masses = (a_p, m_p) if lam >= 0.5 else (a_m, m_m)
    return DiscreteLaw(atoms, masses)


# --------------------------------------------------------------------------
# Three-point extremal search
# --------------------------------------------------------------------------

def _masses_at(a: float, b: float, c: float):
    """Unique masses putting mean 0 / variance 1 on atoms a < b < c."""
    p = (1.0 + b * c) / ((b - a) * (c - a))
    q = -(1.0 + a * c) / ((b - a) * (c - b))
    r = (1.0 + a * b) / ((c - a) * (c - b))
    return p, q, r


def _nu3_at(a: float, b: float, c: float) -> float:
    p, q, r = _masses_at(a, b, c)
    return p * abs(a) ** 3 + q * abs(b) ** 3 + r * c ** 3


def _law_at(a: float, b: float, c: float) -> DiscreteLaw:
    p, q, r = _masses_at(a, b, c)
    m = np.array([p, q, r])
    if np.any(m < -1e-9):
        raise InfeasibleParameters(f"negative mass at atoms {(a, b, c)}")
    m = np.clip(m, 0.0, None)
    atoms = np.array([a, b, c])
    keep = m > 1e-13
    if keep.sum() < 2:
        raise InfeasibleParameters("mass collapsed onto one atom")
    return DiscreteLaw(atoms[keep], m[keep] / m[keep].sum())


def _zeta3_node(rho: float, a: float, b: float, c_lo: float, c_hi: float,
                q_law: DiscreteLaw, n_scan: int = 48):
    """Best zeta_3 over the nu_3(c) = rho solutions at one (a, b) node."""
    if c_hi <= c_lo:
        return None
    cs = np.linspace(c_lo, c_hi, n_scan)
    vals = np.array([_nu3_at(a, b, c) for c in cs]) - rho
    best = None
    for i in range(n_scan - 1):
        if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0:
            try:
                c = _optimize.brentq(lambda x: _nu3_at(a, b, x) - rho,
                                     cs[i], cs[i + 1], xtol=1e-12)
                law = _law_at(a, b, c)
            except (InfeasibleParameters, ValueError):
                continue
            z = zeta_discrete(law, q_law, 3)
            if best is None or z > best[0]:
                best = (z, law)
    return best


def _feasible_c_range(a: float, b: float, c_cap: float):
    # masses >= 0 need 1 + a*b >= 0, 1 + a*c <= 0 and (if b < 0) 1 + b*c >= 0
    if a >= 0.0 or 1.0 + a * b < 0.0:
        return None
    c_lo = max(b + 1e-9, -1.0 / a + 1e-12)
    c_hi = min(c_cap, -1.0 / b - 1e-12) if b < 0.0 else c_cap
    if c_hi <= c_lo:
        return None
    return c_lo, c_hi


@dataclass(frozen=True)
class SearchResult:
    rho: float
    sup_value: float
    bound: float          # B(rho)/6
    corner_value: float   # zeta_3 of the degenerate two-point corner
    witness: DiscreteLaw


def extremal_three_point_search(rho: float, grid_density: int = 200,
                                check: bool = True) -> SearchResult:
    """Maximize zeta_3(P, Rademacher) over standardized 3-point P, nu_3 = rho.

    Two atom positions (a, b) run over a grid; the third atom solves the
    nu_3 equation by bracketed root finding (infeasible nodes skipped);
    the best node is polished by Nelder-Mead.  The degenerate two-point
    corner is evaluated directly and attains B(rho)/6.  With ``check``,
    raises BoundViolation if the sup exceeds B(rho)/6 + 1e-6.
    """
    rho = float(rho)
    if not rho >= 1.0:
        raise BadRho(f"rho must be >= 1, got {rho}")
    q_law = rademacher()
    bound = b_value(rho) / 6.0
    corner = zeta_discrete(two_point_law(rho), q_law, 3)
    best_val = corner
    best_witness = two_point_law(rho)
    if rho > 1.0:
        p_mass = two_point_law(rho)
        reach = float(p_mass.atoms[-1]) + 2.0
        c_cap = reach + 2.0
        a_grid = np.linspace(-reach, -0.05, grid_density)
        b_grid = np.linspace(-reach + 1e-3, reach, grid_density)

        def node_value(a: float, b: float):
            rng = _feasible_c_range(a, b, c_cap)
            if rng is None or b <= a + 1e-6:
                return None
            return _zeta3_node(rho, a, b, rng[0], rng[1], q_law)

        best_node = None
        for a in a_grid:
            for b in b_grid:
                res = node_value(float(a), float(b))
                if res is not None and res[0] > best_val:
                    best_val, best_witness = res
                    best_node = (float(a), float(b))
        if best_node is not None:
            def neg(xy):
                res = node_value(float(xy[0]), float(xy[1]))
                return -res[0] if res is not None else 1.0

            opt = _optimize.minimize(neg, np.array(best_node),
                                     method="Nelder-Mead",
                                     options={"maxiter": 120, "xatol": 1e-8,
                                              "fatol": 1e-12})
            res = node_value(float(opt.x[0]), float(opt.x[1]))
            if res is not None and res[0] > best_val:
                best_val, best_witness = res
    if check and best_val > bound + 1e-6:
        raise BoundViolation(
            f"3-point sup {best_val!r} exceeds B(rho)/6 + 1e-6 = {bound + 1e-6!r}")
    return SearchResult(rho=rho, sup_value=best_val, bound=bound,
                        corner_value=corner, witness=best_witness)
