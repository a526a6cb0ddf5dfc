"""Exception types shared across the package."""


class TdualError(Exception):
    """Base class for all errors raised by this package."""


class NotSublattice(TdualError):
    """The claimed inner lattice is not contained in the outer one."""


class NotCompatible(TdualError):
    """A map does not respect the presentations of the given subquotients."""


class NotBetweenLattices(TdualError):
    """A lattice does not sit between the coroot and coweight lattices."""


class InvalidSeries(TdualError):
    """Unknown simple series or rank outside the classification."""


class InvalidCenterSubgroup(TdualError):
    """Fundamental-group generators do not define a subgroup of the center."""


class RequiresExplicitB(TdualError):
    """The half-pairing formula for the commutator map only applies to
    simply connected, simply laced groups; other inputs must supply the
    commutator map explicitly."""


class NotACycle(TdualError):
    """The given twist representative is not killed by the degree-2
    differential, so it does not represent a degree-3 class."""


class DimensionMismatch(TdualError):
    """Vector or matrix dimensions do not agree."""


class Unavailable(TdualError):
    """No Dynkin-diagram isomorphism onto the dual group exists.

    Carries the failed search evidence in ``.evidence``.
    """

    def __init__(self, message: str, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class InadmissibleCutoff(TdualError):
    """A cutoff profile violates the boundary/plateau requirements."""


class UsageError(TdualError):
    """Malformed command-line input."""
