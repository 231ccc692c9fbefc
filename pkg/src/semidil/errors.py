"""Exception types raised by semidil."""


class SemigroupError(ValueError):
    """Base class for invalid inputs."""


class EmptyGenerators(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    pass


class IsAllOfN(SemigroupError):
    """The input describes the whole of the natural numbers, which is excluded."""


class NotAdditivelyClosed(SemigroupError):
    pass


class NotAMember(SemigroupError):
    pass


class ZeroModulus(SemigroupError):
    pass


class ShiftNotInDomain(SemigroupError):
    """The shift is negative or does not satisfy ``a + M + M ⊆ M``."""


class ShiftNotInSemigroup(SemigroupError):
    """The shift must be a positive member of the semigroup."""


class NotContractible(SemigroupError):
    pass


class ShiftTooLarge(SemigroupError):
    pass


class BadParameters(SemigroupError):
    pass


class NotRepresentable(SemigroupError):
    pass


class ParseError(SemigroupError):
    pass


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
