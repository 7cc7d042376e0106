"""Catkit errors."""


class CatkitError(Exception):
    """Base class of every error raised by the library."""


class InvalidInput(CatkitError, ValueError):
    """An argument does not describe a valid object."""


class DegreeMismatch(InvalidInput):
    """Two operands live in different degrees."""

    def __init__(self, left, right):
        super().__init__("Degree mismatch: {} != {}".format(left, right))
        self.left = left
        self.right = right


class CapExceeded(CatkitError):
    """A configured element or word cap was hit."""

    def __init__(self, what, cap):
        super().__init__("{} exceeds the cap of {}".format(what, cap))
        self.what = what
        self.cap = cap


class CoxeterMatrixError(InvalidInput):
    """Generator permutations do not satisfy the given Coxeter matrix."""


class InternalInconsistency(CatkitError):
    """Two independent computations of the same object disagree.

    This always signals a bug, never bad input.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
