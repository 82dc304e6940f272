"""Exception types raised by scarfposet.

Every error derives from :class:`ScarfError`, itself a ``ValueError``, so the
CLI can map all of them to the input-error exit code in one place.
"""


class ScarfError(ValueError):
    pass


class UnknownLabel(ScarfError):
    pass


class DuplicateLabel(ScarfError):
    pass


class LabelCollision(ScarfError):
    pass


class CyclicRelation(ScarfError):
    pass


class CyclicDigraph(CyclicRelation):
    pass


class NotAntisymmetric(ScarfError):
    pass


class NotTransitive(ScarfError):
    pass


class EmptyInput(ScarfError):
    pass


class EmptySubset(EmptyInput):
    pass


class SubsetViolation(ScarfError):
    pass


class TooSmall(ScarfError):
    pass


class TooFewSinks(TooSmall):
    pass


class Overflow(ScarfError):
    pass


class UniverseTooLarge(ScarfError):
    pass


class SubsetTooLarge(ScarfError):
    pass


class TooLarge(ScarfError):
    pass
