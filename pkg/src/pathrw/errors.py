"""Exception types shared across the package."""


class PathError(Exception):
    """Base class for every error this library raises on purpose."""


class UnknownSpaceError(PathError):
    """A space name that is not one of the builtin presentations."""


class UnknownPointError(PathError):
    """A point name not declared by the presentation."""


class UnknownGeneratorError(PathError):
    """A generator name not declared by the presentation."""


class EndpointMismatchError(PathError):
    """Composition or comparison of paths whose endpoints do not line up."""


class NotALoopError(PathError):
    """An integer power of a path whose source and target differ."""


class StepNotEnabledError(PathError):
    """A rewrite step applied at a position where its pattern does not match."""


class SpaceMismatchError(PathError):
    """An operation mixing path classes from different presentations."""


class GroupTagMismatchError(PathError):
    """A group value whose variant does not match the space's group tag."""


class NotABasepointLoopError(PathError):
    """encode/decode applied to a class that is not a loop at the basepoint."""


class UnreachableEndpointsError(PathError):
    """Requested endpoints that no term over the presentation can join."""


class SpaceMapError(PathError):
    """A map between presentations that fails its well-definedness checks."""


class ParseError(PathError):
    """Rejected text: path expressions, space files, or group values."""
