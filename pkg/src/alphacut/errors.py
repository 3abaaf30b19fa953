"""Exception hierarchy shared by every module of the package."""


class AlphaCutError(Exception):
    """Base class for all library errors."""


class InputError(AlphaCutError):
    """Malformed or inconsistent input (maps to CLI exit status 2)."""


class CycleDetected(InputError):
    pass


class NotALattice(InputError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class Unbounded(InputError):
    pass


class UnknownElement(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownPoint(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAFrame(AlphaCutError):
    pass


class NotAChain(AlphaCutError):
    pass


class BaseMismatch(InputError):
    pass


class LatticeMismatch(InputError):
    pass


class FamilyNotClosed(AlphaCutError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidSpace(AlphaCutError):
    pass


class GroupError(AlphaCutError):
    """A fuzzy group law fails; ``witness`` names the offending points."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class AssociativityWitness(GroupError):
    pass


class EmptyCutSupport(AlphaCutError):
    pass


class InternalInconsistency(AlphaCutError):
    pass


class BadParameters(InputError):
    pass


class BoundExceeded(InputError):
    pass


class SchemaError(InputError):
    pass


class ParseError(InputError):
    pass
