"""Exception hierarchy shared by every superpic module."""


class SuperpicError(Exception):
    """Base class for all library errors."""


class NotAUnit(SuperpicError):
    pass


class InvalidDirection(SuperpicError):
    pass


class MissingAssignment(SuperpicError):
    pass


class NonIntegerForIntegerUnknown(SuperpicError):
    pass


class ParseError(SuperpicError):
    pass


class OutOfRange(SuperpicError):
    pass


class InvalidPolytope(SuperpicError):
    """Malformed polytope input (duplicate vertices, ragged coordinates...)."""


class DegeneratePolytope(SuperpicError):
    pass


class TooLargeForEnumeration(SuperpicError):
    pass


class IncompleteFan(SuperpicError):
    pass


class InvalidDirections(SuperpicError):
    """Some skeleton edge is not parallel to x_i or x_i - x_j."""


class ModeMismatch(SuperpicError):
    pass


class InadmissibleInput(SuperpicError):
    pass


class LengthMismatch(SuperpicError):
    pass


class NotAnElement(SuperpicError):
    pass


class InvariantFailure(SuperpicError):
    """A certified post-condition did not hold."""
