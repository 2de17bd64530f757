"""Exception hierarchy shared by all modules."""


class SGEError(Exception):
    """Base class for every error raised by this package."""


# chirotope
class DegenerateInput(SGEError, ValueError):
    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class NotAcyclic(SGEError):
    pass


class NotOnHull(SGEError, ValueError):
    pass


class OnHull(SGEError, ValueError):
    pass


class NoConsistentCycle(SGEError):
    pass


class InconsistentInput(SGEError, ValueError):
    pass


class SearchExhausted(SGEError):
    pass


# reduction
class NonTriangularHull(SGEError, ValueError):
    pass


class TooSmall(SGEError, ValueError):
    pass


# geometry
class MissingLabel(SGEError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


# solver
class RealizationMismatch(SGEError, ValueError):
    pass


class DegenerateRealization(SGEError):
    pass


class NoMutualFace(SGEError):
    pass


class InstanceTooLarge(SGEError, ValueError):
    pass


# formats
class FormatError(SGEError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VersionError(SGEError, ValueError):
    pass
