"""Finite-support probability laws: construction, moments, convolution.

A law is a pair of parallel arrays (atoms, masses): atoms strictly
increasing, masses positive and summing to 1.  Everything is immutable and
pure, so values are safe to share across threads.

Floating-point convolution produces atoms that coincide up to rounding;
those are merged at an absolute tolerance of 1e-12 scaled by magnitude
(``DEDUPE_ATOL``), with the merged atom at the mass-weighted mean.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy import stats as _stats

from . import extremal
from .errors import (BadInput, BadMass, BadN, BadOrder, BadParam, BadRho,
                     DegenerateLaw, EmptySupport, IOFailure, SupportBlowup)

DEDUPE_ATOL = 1e-12
_MASS_TOL = 1e-9
DEFAULT_MAX_ATOMS = 2_000_000


def _dedupe_sorted(atoms: np.ndarray, masses: np.ndarray):
    """Merge sorted atoms whose gap is below the scaled tolerance.

    Merged position is the |mass|-weighted mean, which keeps convolution
    moments accurate.  Works for signed masses as well (weights |mass|).
    """
    if len(atoms) == 0:
        return atoms, masses
    gaps = np.diff(atoms)
    tol = DEDUPE_ATOL * np.maximum(1.0, np.maximum(np.abs(atoms[:-1]),
                                                   np.abs(atoms[1:])))
    starts = np.flatnonzero(np.concatenate(([True], gaps > tol)))
    if len(starts) == len(atoms):
        return atoms, masses
    w = np.abs(masses)
    msum = np.add.reduceat(masses, starts)
    wsum = np.add.reduceat(w, starts)
    xsum = np.add.reduceat(w * atoms, starts)
    with np.errstate(invalid="ignore"):
        pos = np.where(wsum > 0.0, xsum / np.where(wsum > 0.0, wsum, 1.0),
                       atoms[starts])
    return pos, msum


@dataclass(frozen=True)
class DiscreteLaw:
    """Validated finite-support law with strictly increasing atoms."""

    atoms: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        atoms = np.asarray(self.atoms, dtype=float)
        masses = np.asarray(self.masses, dtype=float)
        if atoms.ndim != 1 or atoms.shape != masses.shape or len(atoms) == 0:
            raise BadInput("atoms and masses must be equal-length 1-D arrays")
        if np.any(masses <= 0.0):
            raise BadMass("all masses must be > 0")
        if abs(masses.sum() - 1.0) > 1e-12:
            raise BadMass(f"masses sum to {masses.sum()!r}, not 1")
        if len(atoms) > 1:
            gap_tol = DEDUPE_ATOL * np.maximum(
                1.0, np.maximum(np.abs(atoms[:-1]), np.abs(atoms[1:])))
            if np.any(np.diff(atoms) <= gap_tol):
                raise BadInput(
                    "atoms must be strictly increasing with gaps above the "
                    "dedupe tolerance")
        atoms.flags.writeable = False
        masses.flags.writeable = False
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "masses", masses)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def support(self) -> tuple[float, float]:
        return float(self.atoms[0]), float(self.atoms[-1])

    def raw_moment(self, k: int) -> float:
        return float(np.dot(self.masses, self.atoms ** k))

    def abs_moment(self, k: float) -> float:
        return float(np.dot(self.masses, np.abs(self.atoms) ** k))

    def pairs(self):
        return list(zip(self.atoms.tolist(), self.masses.tolist()))


@dataclass(frozen=True)
class MomentSummary:
    """Mean, variance, third central absolute moment and rho = nu3/sigma^3.

    ``rho`` is None for point masses (variance 0); it is >= 1 otherwise,
    with equality exactly when the standardization is the symmetric
    two-point law on {-1, +1}.
    """

    mean: float
    variance: float
    third_central_abs: float
    rho: float | None

    @property
    def degenerate(self) -> bool:
        return self.rho is None


def make_discrete(pairs: Iterable[tuple[float, float]]) -> DiscreteLaw:
    """Build a law from (point, mass) pairs.

    Masses must be >= 0 with total within 1e-9 of 1; zero-mass atoms are
    dropped, coincident atoms merged, masses renormalized to sum exactly 1.
    """
    pts = [(float(x), float(m)) for x, m in pairs]
    if not pts:
        raise EmptySupport("no pairs given")
    atoms = np.array([x for x, _ in pts])
    masses = np.array([m for _, m in pts])
    if np.any(masses < 0.0):
        raise BadMass("negative mass")
    keep = masses > 0.0
    if not keep.any():
        raise EmptySupport("all masses are zero")
    total = masses.sum()
    if abs(total - 1.0) > _MASS_TOL:
        raise BadMass(f"total mass {total!r} outside (1-1e-9, 1+1e-9)")
    atoms, masses = atoms[keep], masses[keep]
    order = np.argsort(atoms, kind="stable")
    atoms, masses = _dedupe_sorted(atoms[order], masses[order])
    return DiscreteLaw(atoms, masses / masses.sum())


def dirac(x: float) -> DiscreteLaw:
    return DiscreteLaw(np.array([float(x)]), np.array([1.0]))


def rademacher() -> DiscreteLaw:
    """The symmetric two-point law (delta_{-1} + delta_{+1}) / 2."""
    return DiscreteLaw(np.array([-1.0, 1.0]), np.array([0.5, 0.5]))


def moments(law: DiscreteLaw) -> MomentSummary:
    mean = law.raw_moment(1)
    centred = law.atoms - mean
    variance = float(np.dot(law.masses, centred * centred))
    tca = float(np.dot(law.masses, np.abs(centred) ** 3))
    if law.n_atoms == 1:
        return MomentSummary(mean=mean, variance=0.0, third_central_abs=0.0,
                             rho=None)
    return MomentSummary(mean=mean, variance=variance, third_central_abs=tca,
                         rho=tca / variance ** 1.5)


def standardize(law: DiscreteLaw) -> DiscreteLaw:
    """Pushforward under x -> (x - mean)/sigma; mean 0, variance 1."""
    if law.n_atoms == 1:
        raise DegenerateLaw("cannot standardize a point mass")
    mean = law.raw_moment(1)
    centred = law.atoms - mean
    sigma = math.sqrt(float(np.dot(law.masses, centred * centred)))
    return DiscreteLaw(centred / sigma, law.masses)


def cumulant(law: DiscreteLaw, ell: int) -> float:
    """Cumulants kappa_1..kappa_4; additive under convolution."""
    if ell not in (1, 2, 3, 4):
        raise BadOrder(f"cumulant order must be 1..4, got {ell}")
    mean = law.raw_moment(1)
    if ell == 1:
        return mean
    centred = law.atoms - mean
    var = float(np.dot(law.masses, centred ** 2))
    if ell == 2:
        return var
    if ell == 3:
        return float(np.dot(law.masses, centred ** 3))
    return float(np.dot(law.masses, centred ** 4)) - 3.0 * var * var


def convolve(laws: Sequence[DiscreteLaw],
             max_atoms: int = DEFAULT_MAX_ATOMS) -> DiscreteLaw:
    """Exact convolution with atom dedupe; mean/variance/cumulants add."""
    if not laws:
        raise BadInput("need at least one law to convolve")
    acc = sorted(laws, key=lambda l: l.n_atoms)
    out = acc[0]
    for law in acc[1:]:
        if out.n_atoms * law.n_atoms > max_atoms:
            raise SupportBlowup(
                f"{out.n_atoms} x {law.n_atoms} atoms exceeds budget {max_atoms}")
        pts = np.add.outer(out.atoms, law.atoms).ravel()
        wts = np.multiply.outer(out.masses, law.masses).ravel()
        order = np.argsort(pts, kind="stable")
        pts, wts = _dedupe_sorted(pts[order], wts[order])
        out = DiscreteLaw(pts, wts / wts.sum())
    return out


def scale_law(law: DiscreteLaw, a: float) -> DiscreteLaw:
    """Pushforward under x -> a*x, a != 0."""
    a = float(a)
    if a == 0.0:
        raise BadParam("scale factor must be nonzero")
    atoms = law.atoms * a
    if a > 0:
        return DiscreteLaw(atoms, law.masses)
    return DiscreteLaw(atoms[::-1].copy(), law.masses[::-1].copy())


def binomial_half(n: int) -> DiscreteLaw:
    """Binomial(n, 1/2) on atoms 0..n; masses exact-ratio-rounded doubles."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise BadN(f"n must be an integer >= 1, got {n!r}")
    denom = 1 << n
    masses = np.array([float(Fraction(math.comb(n, k), denom))
                       for k in range(n + 1)])
    return DiscreteLaw(np.arange(n + 1, dtype=float), masses / masses.sum())


def two_point_law(rho: float) -> DiscreteLaw:
    """The standardized two-point law with nu_3 = rho and mu_3 >= 0.

    Atoms -sqrt(p/q) (mass q) and sqrt(q/p) (mass p), p = two_point_mass(rho).
    """
    if not float(rho) >= 1.0:
        raise BadRho(f"rho must be >= 1, got {rho}")
    p = extremal.two_point_mass(float(rho))
    q = 1.0 - p
    return DiscreteLaw(np.array([-math.sqrt(p / q), math.sqrt(q / p)]),
                       np.array([q, p]))


def _poisson_rho(lam: float) -> float:
    # truncate where the remaining |k-lam|^3-weighted mass is < ~1e-16
    kmax = int(lam + 50.0 * math.sqrt(lam + 1.0) + 60.0)
    k = np.arange(kmax + 1)
    pmf = _stats.poisson.pmf(k, lam)
    third = float(np.dot(pmf, np.abs(k - lam) ** 3))
    return third / lam ** 1.5


def _geometric_rho(p: float) -> float:
    q = 1.0 - p
    mean = q / p
    var = q / (p * p)
    kmax = max(64, int(math.log(1e-19) / math.log(q)) + 1)
    k = np.arange(kmax + 1)
    pmf = p * q ** k
    third = float(np.dot(pmf, np.abs(k - mean) ** 3))
    return third / var ** 1.5


def catalog_rho(name: str, param: float | None = None) -> float:
    """Standardized third absolute moment of a named classical law.

    Closed forms: exponential 12/e - 2, uniform 3*sqrt(3)/4,
    bernoulli (p^2+q^2)/sqrt(pq); poisson/geometric by truncated series.
    """
    if name == "exponential":
        return 12.0 * math.exp(-1.0) - 2.0
    if name == "uniform":
        return 3.0 * math.sqrt(3.0) / 4.0
    if name == "bernoulli":
        if param is None or not 0.0 < param <= 0.5:
            raise BadParam(f"bernoulli requires 0 < p <= 1/2, got {param!r}")
        q = 1.0 - param
        return (param * param + q * q) / math.sqrt(param * q)
    if name == "poisson":
        if param is None or not param > 0.0:
            raise BadParam(f"poisson requires lambda > 0, got {param!r}")
        return _poisson_rho(float(param))
    if name == "geometric":
        if param is None or not 0.0 < param < 1.0:
            raise BadParam(f"geometric requires 0 < p < 1, got {param!r}")
        return _geometric_rho(float(param))
    raise BadParam(f"unknown catalog law {name!r}")


# --- JSON law format: {"atoms": [...], "masses": [...]} -------------------

def law_from_json(data) -> DiscreteLaw:
    """Parse the JSON law format; applies make_discrete semantics."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise IOFailure(f"invalid JSON: {exc}") from exc
    try:
        atoms = data["atoms"]
        masses = data["masses"]
    except (TypeError, KeyError) as exc:
        raise IOFailure("law JSON must have 'atoms' and 'masses'") from exc
    if len(atoms) != len(masses):
        raise IOFailure("atoms and masses differ in length")
    return make_discrete(zip(atoms, masses))


def law_to_json(law: DiscreteLaw) -> str:
    return json.dumps({"atoms": law.atoms.tolist(),
                       "masses": law.masses.tolist()})


def load_law(path) -> DiscreteLaw:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IOFailure(f"cannot read law file {path}: {exc}") from exc
    return law_from_json(text)


def save_law(law: DiscreteLaw, path) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(law_to_json(law))
    except OSError as exc:
        raise IOFailure(f"cannot write law file {path}: {exc}") from exc
