"""Exception hierarchy.

Every failure mode raised by this library derives from ZetaForgeError, so
callers can catch one base class.  Names mirror the failure they signal;
none of them are recoverable by retrying with the same inputs.
"""


class ZetaForgeError(Exception):
    """Base class for all errors raised by zetaforge."""


class EmptySupport(ZetaForgeError):
    """All masses were zero; a law needs at least one atom."""


class BadMass(ZetaForgeError):
    """Negative mass, or total mass not within tolerance of 1."""


class DegenerateLaw(ZetaForgeError):
    """Operation requires positive variance but the law is a point mass."""


class BadOrder(ZetaForgeError):
    """Cumulant or distance order outside the supported range."""


class SupportBlowup(ZetaForgeError):
    """Convolution support would exceed the configured atom budget."""


class BadN(ZetaForgeError):
    """Integer size parameter out of range."""


class BadRho(ZetaForgeError):
    """Standardized third absolute moment must be >= 1."""


class BadParam(ZetaForgeError):
    """Distribution or constant parameter out of its valid range."""


class BadIndex(ZetaForgeError):
    """Index arguments violate 1 <= k, 0 <= a <= n."""


class BadInput(ZetaForgeError):
    """Malformed argument (wrong length, empty sequence, bad enum value)."""


class NotSorted(ZetaForgeError):
    """Sequence was required to be sorted decreasing and is not."""


class BadRange(ZetaForgeError):
    """Osculation parameters must satisfy u > v >= 0 and r != 0."""


class CoincidentNodes(ZetaForgeError):
    """Two-point interpolation nodes coincide."""


class IllConditioned(ZetaForgeError):
    """Interpolation nodes too close for a reliable solve."""


class NumericalRankFailure(ZetaForgeError):
    """Null-space extraction in the decomposition was ill-conditioned."""


class InfeasibleParameters(ZetaForgeError):
    """Moment system has no probability solution at this grid node."""


class UnresolvedSign(ZetaForgeError):
    """Two candidate sign changes closer than the resolution limit."""


class NotStandardized(ZetaForgeError):
    """Law must have mean 0 and variance 1 within tolerance."""


class SandwichViolation(ZetaForgeError):
    """Computed value escaped its proven lower/upper lines."""


class BoundViolation(ZetaForgeError):
    """A proven inequality failed numerically; signals a test failure."""


class IOFailure(ZetaForgeError):
    """Reading or writing a law file or report failed."""


class MomentMismatch(ZetaForgeError):
    """Moments required to agree differ beyond tolerance.

    The distance is then infinite; ``moment_index`` is the smallest
    offending moment order.
    """

    def __init__(self, moment_index: int, detail: str = ""):
        self.moment_index = int(moment_index)
        msg = f"moment {self.moment_index} differs beyond tolerance"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)
