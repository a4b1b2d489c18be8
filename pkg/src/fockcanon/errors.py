"""Exception types raised across the package.

Every error derives from :class:`FockCanonError` (itself a ``ValueError``) so
callers can catch the whole family at once; the CLI reports the class name.
"""


class FockCanonError(ValueError):
    """Base class for all package errors."""


# group structure
class DegenerateElement(FockCanonError):
    pass


class SingularMatrix(FockCanonError):
    pass


class BranchFailure(FockCanonError):
    """A sign that should be exactly +1 or -1 came out as something else."""


# quadrature
class NonFiniteIntegrand(FockCanonError):
    pass


# kernels and operators
class ZeroS(FockCanonError):
    pass


class NotInFock(FockCanonError):
    pass


class DomainViolation(FockCanonError):
    pass


class NotHilbertSchmidt(FockCanonError):
    pass


class NotUnitary(FockCanonError):
    pass


class TruncationTooLarge(FockCanonError):
    pass


# spectral theory
class NoDiskSolution(FockCanonError):
    pass


class DegenerateKappa(FockCanonError):
    pass


# Hermite family
class ZeroDelta(FockCanonError):
    pass


class NonPositiveRealPart(FockCanonError):
    pass


class HypothesisViolation(FockCanonError):
    pass


class OverflowGuard(FockCanonError):
    pass


# linear canonical transforms
class SingularDet(FockCanonError):
    pass


class OscillationBudgetExceeded(FockCanonError):
    pass


# command line
class UsageError(FockCanonError):
    pass
