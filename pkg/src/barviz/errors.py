"""Exception types raised across the package."""


class BarvizError(ValueError):
    """Base class for all library errors."""


class EmptyGraph(BarvizError):
    pass


class InvalidInput(BarvizError):
    pass


class ParseError(BarvizError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidLayout(BarvizError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class NotRepresentable(BarvizError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"not a bar visibility digraph: {reason}")


class SizeLimit(BarvizError):
    pass


class BadSize(BarvizError):
    pass


class NotTriangleFree(BarvizError):
    pass


class NotSpanning(BarvizError):
    pass


class WrongRealization(BarvizError):
    pass


class DepthExceeded(BarvizError):
    pass


class NotOneWayBipartite(BarvizError):
    pass


class SameSide(BarvizError):
    pass


class NotCubicTriangleFree(BarvizError):
    pass


class BadOrientation(BarvizError):
    pass


class NotHamiltonianOfSource(BarvizError):
    pass


class AssemblyOverflow(BarvizError):
    pass


class BadT(BarvizError):
    pass
