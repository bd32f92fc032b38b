"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class SqrtPolyError(Exception):
    exit_code = 1


class PreconditionError(SqrtPolyError, ValueError):
    """An input falls outside the domain of the requested operation."""

    exit_code = 2


class ModulusMismatch(PreconditionError):
    pass


class NotPrime(PreconditionError):
    pass


class NonResidue(PreconditionError):
    pass


class WrongResidueClass(PreconditionError):
    pass


class InvalidOrder(PreconditionError):
    pass


class DuplicateNode(PreconditionError):
    pass


class HypothesisViolated(PreconditionError):
    pass


class ParseError(SqrtPolyError, ValueError):
    exit_code = 3


class SearchSpaceTooLarge(SqrtPolyError):
    exit_code = 4


class TheoremViolation(SqrtPolyError, AssertionError):
    """A proven inequality failed. Indicates a bug, never expected input."""

    exit_code = 5
