"""Exception hierarchy shared by every module of the package."""


class ShlatError(Exception):
    """Base class for all library errors."""


class SumNotOne(ShlatError, ValueError):
    pass


class NegativeMass(ShlatError, ValueError):
    pass


class EmptySupport(ShlatError, ValueError):
    pass


class LengthMismatch(ShlatError, ValueError):
    pass


class SpaceMismatch(ShlatError, ValueError):
    """Two variables live on different probability spaces."""


class NotComparable(ShlatError, ValueError):
    """The order relation required by an operation does not hold."""


class DeterministicOperand(ShlatError, ValueError):
    pass


class TooManyGenerators(ShlatError, ValueError):
    pass


class SupportTooLarge(ShlatError, ValueError):
    pass


class ComponentNotDerived(ShlatError, ValueError):
    """A reconstruction component is not a function of the target."""


class NotSymmetric(ShlatError, ValueError):
    pass


class ZeroMass(ShlatError, ValueError):
    pass


class BadDimensions(ShlatError, ValueError):
    pass


class NotCoprime(ShlatError, ValueError):
    pass


class KTooLarge(ShlatError, ValueError):
    pass


class BadParameters(ShlatError, ValueError):
    pass


class WorkspaceError(ShlatError, ValueError):
    """Problem with a workspace document; carries a location when known."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(path)
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class ParseError(WorkspaceError):
    """Malformed workspace text (syntax or format rule)."""


class ValidationError(WorkspaceError):
    """Well-formed workspace that violates a semantic rule."""
