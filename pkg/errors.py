"""Exceptions raised by the partial braid toolkit"""


class AlgebraError(ValueError):
    """Base class for all errors raised by this package"""


class RankMismatchError(AlgebraError):
    """Operands live on ambient sets of different rank"""

    def __init__(self, left, right):
        super().__init__(f"incompatible ambient sets: rank {left} vs rank {right}")
        self.left = left
        self.right = right


class WordParseError(AlgebraError):
    """A word or generator token does not follow the word grammar"""


class ElementParseError(AlgebraError):
    """An element in text or JSON form could not be read"""


class EnumerationCapError(AlgebraError):
    """Requested rank is above the configured enumeration cap"""

    def __init__(self, n, cap, signed):
        kind = "signed" if signed else "unsigned"
        super().__init__(f"rank {n} exceeds the {kind} enumeration cap of {cap}")
        self.n = n
        self.cap = cap
        self.signed = signed


class PreconditionError(AlgebraError):
    """An operation was called outside its domain"""


class ConjugatorShapeError(AlgebraError):
    """A composed free-group image is not of the form u^-1 x_t u"""


class UnknownPresentationError(AlgebraError):
    """No presentation is registered under the given identifier"""
