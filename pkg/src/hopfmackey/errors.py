"""Exception hierarchy shared by every module of the package."""


class HopfMackeyError(Exception):
    """Base class for all errors raised by hopfmackey; ``witness`` locates the problem."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class InputError(HopfMackeyError):
    """Malformed or ill-formed input data (CLI exit code 2)."""


class VerificationError(HopfMackeyError):
    """An internal consistency check failed on otherwise well-formed data."""


class MalformedTable(InputError):
    pass


class RingMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class UnknownFixture(InputError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown fixture"


class MalformedDatum(InputError):
    pass


class IncompleteRepData(InputError):
    pass


class LatticeMismatch(InputError):
    pass


class BasisTooLarge(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class NotASubgroup(InputError):
    pass


class UnsupportedSubgroup(InputError):
    pass


class NotNormal(InputError):
    pass


class NotMackeyPair(InputError):
    pass


class AxiomViolation(VerificationError):
    pass


class NoConvergence(VerificationError):
    pass


class IntegralPropertyFailure(VerificationError):
    pass


class InvertibleClosureFailure(VerificationError):
    pass


class FreenessViolation(VerificationError):
    pass


class ClosureViolation(VerificationError):
    pass


class GradingInconsistency(VerificationError):
    pass


class NonIntegralFusion(VerificationError):
    pass


class IntransitiveRelation(VerificationError):
    pass
