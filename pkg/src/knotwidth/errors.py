"""Exception types shared across the package."""


class KnotWidthError(Exception):
    """Base class for every error raised by knotwidth."""


class ValidationError(KnotWidthError):
    """An event sequence does not describe a single closed knot."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class IllegalPosition(ValidationError):
    def __init__(self, index, event, strands):
        self.event = event
        self.strands = strands
        super().__init__(
            f"event {index} ({event}) is illegal at a level with {strands} strands",
            index,
        )


class UnbalancedCounts(ValidationError):
    def __init__(self, message, index=None):
        super().__init__(message, index)


class MultiComponent(ValidationError):
    def __init__(self, components):
        self.components = components
        super().__init__(f"diagram has {components} components, expected a knot")


class IllegalBraid(ValidationError):
    pass


class OddResult(KnotWidthError):
    """Sum of squares in a decomposition came out odd."""


class ParityError(KnotWidthError):
    """A symbolic width is not integral on the declared parameter lattice."""


class DomainViolation(KnotWidthError):
    def __init__(self, constraint, point=None):
        self.constraint = constraint
        self.point = point
        where = f" at {point}" if point else ""
        super().__init__(f"domain violation: {constraint}{where}")


class EmptyDomain(KnotWidthError):
    pass


class IllegalMove(KnotWidthError):
    pass


class DslSyntaxError(KnotWidthError):
    def __init__(self, line, col, expected, found=""):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        msg = f"line {line}, col {col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
