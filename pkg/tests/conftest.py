"""Shared independent oracles for the test suite.

Everything here is deliberately written from the defining formulas
(direct tail sums, trapezoid quadrature, brute-force enumerations), not
through the package's piecewise-polynomial machinery, so it can serve as
an independent cross-check of the computational paths.
"""

import math

import numpy as np
import pytest

from zetaforge import make_discrete, standardize


def hbar_direct(p_law, q_law, k, ts):
    """Hbar_k(t) = sum over Q minus sum over P of (x - t)_+^{k-1}/(k-1)!.

    For k = 1 the integrand is the upper-tail indicator [x >= t] (not a
    clipped power: 0**0 would count every atom).
    """
    ts = np.asarray(ts, dtype=float)
    if k == 1:
        gq = (q_law.atoms[None, :] >= ts[:, None]) @ q_law.masses
        fp = (p_law.atoms[None, :] >= ts[:, None]) @ p_law.masses
        return gq - fp
    fact = math.factorial(k - 1)
    gq = (np.clip(q_law.atoms[None, :] - ts[:, None], 0.0, None) ** (k - 1)
          ) @ q_law.masses
    fp = (np.clip(p_law.atoms[None, :] - ts[:, None], 0.0, None) ** (k - 1)
          ) @ p_law.masses
    return (gq - fp) / fact


def zeta_trapezoid(p_law, q_law, s, step=1e-4):
    """Trapezoid quadrature of |Hbar_s| over the support hull."""
    lo = min(p_law.atoms[0], q_law.atoms[0])
    hi = max(p_law.atoms[-1], q_law.atoms[-1])
    ts = np.arange(lo, hi + step / 2, step)
    return float(np.trapezoid(np.abs(hbar_direct(p_law, q_law, s, ts)), ts))


def random_standardized(rng, n_lo=3, n_hi=6):
    """Test-local standardized law generator (atoms in [-3,3], Dirichlet)."""
    n = int(rng.integers(n_lo, n_hi + 1))
    while True:
        atoms = np.sort(rng.uniform(-3.0, 3.0, size=n))
        if np.min(np.diff(atoms)) > 1e-3:
            break
    masses = rng.dirichlet(np.ones(n))
    masses = np.clip(masses, 1e-12, None)
    return standardize(make_discrete(zip(atoms, masses / masses.sum())))


def random_symmetric_std(rng, half_atoms=2):
    """Symmetric standardized law: mean = mu3 = 0, variance 1."""
    a = np.sort(rng.uniform(0.2, 3.0, size=half_atoms))
    m = rng.dirichlet(np.ones(half_atoms))
    pairs = [(-x, mm / 2) for x, mm in zip(a, m)]
    pairs += [(x, mm / 2) for x, mm in zip(a, m)]
    return standardize(make_discrete(pairs))


def discretized_normal(sigma, step_frac=1.0 / 40.0, span=8.0):
    """Lattice approximation of a centred normal with std sigma."""
    step = sigma * step_frac
    xs = np.arange(-span * sigma, span * sigma + step / 2, step)
    w = np.exp(-0.5 * (xs / sigma) ** 2)
    return make_discrete(zip(xs, w / w.sum()))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
