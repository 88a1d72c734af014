"""Krawtchouk polynomials for the symmetric binomial weight.

P_0(x) = 1, P_1(x) = -2(x - n/2), and for k >= 1

    (k+1) P_{k+1}(x) = (n - 2x) P_k(x) - (n - k + 1) P_{k-1}(x),

which agrees with the alternating binomial-sum definition
sum_j (-1)^j C(x,j) C(n-x,k-j).  The closed partial-sum identity

    sum_{x=0}^{a} P_k(x) b(x) = (n-a)/k * P^{n-1}_{k-1}(a) * b(a),

with b(x) = C(n,x) 2^{-n}, telescopes binomial moment sums; it yields the
closed form of the central absolute third moment of Binomial(n, 1/2) used
as the exact lower line in the normal-approximation error analysis.

Two backends are exposed everywhere: float (exact=False) and big-rational
(exact=True, Fraction arithmetic) as the correctness oracle.  Binomial
masses are computed from exact integer binomials and converted with
correct rounding, so no log-gamma error enters even for n ~ 1e4.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BadIndex, BadN, BoundViolation

_PARTIAL_SUM_TOL = 1e-10


def binom_mass(n: int, k: int, exact: bool = False):
    """b_{n,1/2}(k) = C(n,k) / 2^n; Fraction when exact, else float."""
    if n < 0 or k < 0 or k > n:
        raise BadIndex(f"need 0 <= k <= n, got n={n}, k={k}")
    frac = Fraction(math.comb(n, k), 1 << n)
    return frac if exact else float(frac)


def kraw_eval(n: int, k: int, x, exact: bool = False):
    """Value of the k-th Krawtchouk polynomial for Binomial(n, 1/2) at x.

    Three-term recursion seeded by P_0 = 1 and P_1 = -2(x - n/2); valid for
    any k >= 0 (the recursion is a polynomial identity in x).
    """
    if n < 0 or k < 0:
        raise BadIndex(f"need n >= 0 and k >= 0, got n={n}, k={k}")
    if exact:
        x = Fraction(x)
        prev = Fraction(1)
        cur = Fraction(n) - 2 * x
    else:
        x = float(x)
        prev = 1.0
        cur = n - 2.0 * x
    if k == 0:
        return prev
    if k == 1:
        return cur
    for j in range(1, k):
        prev, cur = cur, (cur * (n - 2 * x) - (n - j + 1) * prev) / (j + 1)
    return cur


def kraw_partial_sum(n: int, k: int, a: int, exact: bool = False):
    """Closed-form partial sum sum_{x=0}^{a} P^n_k(x) b_{n,1/2}(x).

    Returns (n-a)/k * P^{n-1}_{k-1}(a) * b_{n,1/2}(a) and checks it against
    the direct sum: exactly in rational mode, within 1e-10 in float mode.
    """
    if n < 1 or k < 1 or not 0 <= a <= n:
        raise BadIndex(f"need n >= 1, k >= 1, 0 <= a <= n; got {(n, k, a)}")
    closed = kraw_eval(n - 1, k - 1, a, exact=exact) * binom_mass(n, a, exact=exact)
    closed = closed * (n - a) / k if exact else closed * (n - a) / float(k)
    direct = sum(kraw_eval(n, k, x, exact=exact) * binom_mass(n, x, exact=exact)
                 for x in range(a + 1))
    if exact:
        if closed != direct:
            raise BoundViolation(
                f"closed summation failed exactly at (n,k,a)={(n, k, a)}")
    elif abs(closed - direct) > _PARTIAL_SUM_TOL * max(1.0, abs(direct)):
        raise BoundViolation(
            f"closed summation off by {abs(closed - direct):.3e} at {(n, k, a)}")
    return closed


def binom_abs3(n: int, standardized: bool = False, exact: bool = False):
    """Central absolute third moment of Binomial(n, 1/2).

    Raw mode: sum |x - n/2|^3 b(x), equal to (n^2/4) b(n/2) for even n and
    (n^2/4 + n/8 - 1/8) b(floor(n/2)) for odd n.  Standardized mode rescales
    by (2/sqrt(n))^3: 2*sqrt(n) b(n/2) even, and
    (2 sqrt(n) + n^{-1/2} - n^{-3/2}) b(floor(n/2)) odd.  Exact mode (raw
    only) returns a Fraction.
    """
    if n < 1:
        raise BadN(f"n must be >= 1, got {n}")
    b_mid = binom_mass(n, n // 2, exact=exact)
    if n % 2 == 0:
        raw_factor = Fraction(n * n, 4) if exact else 0.25 * n * n
    else:
        raw_factor = (Fraction(n * n, 4) + Fraction(n, 8) - Fraction(1, 8)
                      if exact else 0.25 * n * n + 0.125 * n - 0.125)
    if not standardized:
        return raw_factor * b_mid
    if exact:
        raise BadN("standardized mode is irrational; use exact=False")
    rt = math.sqrt(n)
    if n % 2 == 0:
        return 2.0 * rt * b_mid
    return (2.0 * rt + 1.0 / rt - 1.0 / (n * rt)) * b_mid
