"""Exception hierarchy shared by all geodetic_lab modules."""


class GeodeticLabError(Exception):
    """Base class for every error raised by this package."""


class SelfLoop(GeodeticLabError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRange(GeodeticLabError, ValueError):
    pass


class InvalidSize(GeodeticLabError, ValueError):
    pass


class Disconnected(GeodeticLabError, ValueError):
    pass


class DomainMismatch(GeodeticLabError, ValueError):
    pass


class NoNodes(GeodeticLabError, ValueError):
    pass


class PendantVertex(GeodeticLabError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex} has degree 1")
        self.vertex = vertex


class MultiEdgeCollapse(GeodeticLabError, ValueError):
    def __init__(self, u, v):
        super().__init__(f"nodes {u} and {v} are joined by parallel segments")
        self.pair = (u, v)


class TooLarge(GeodeticLabError, ValueError):
    pass


class NotMooreBase(GeodeticLabError, ValueError):
    pass


class NotGeodetic(GeodeticLabError, ValueError):
    pass


class FormatError(GeodeticLabError, ValueError):
    pass


class BudgetExceeded(GeodeticLabError, RuntimeError):
    """Search stopped early; ``progress`` carries whatever was completed."""

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress
