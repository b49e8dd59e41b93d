"""Exception hierarchy shared by all modules."""


class NewtonsingError(Exception):
    """Base class for all domain errors raised by this package."""


class NonPrimitiveInput(NewtonsingError):
    pass


class EqualVectors(NewtonsingError):
    pass


class NonCoprime(NewtonsingError):
    pass


class NotEmpty(NewtonsingError):
    pass


class Degenerate(NewtonsingError):
    pass


class NotAVertex(NewtonsingError):
    pass


class NotIsolated(NewtonsingError):
    pass


class NoCompactFace(NewtonsingError):
    pass


class NotRationalHomologySphere(NewtonsingError):
    pass


class NotNegativeDefinite(NewtonsingError):
    pass


class Disconnected(NewtonsingError):
    pass


class NotTree(NewtonsingError):
    pass


class KindMismatch(NewtonsingError):
    pass


class ClassificationFailed(NewtonsingError):
    pass


class InputError(NewtonsingError):
    """Malformed input document (CLI layer, exit code 2)."""
