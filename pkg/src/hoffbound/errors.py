"""Exception hierarchy shared by every module."""


class HoffboundError(Exception):
    pass


class ParameterError(HoffboundError, ValueError):
    """Raised when a parameter triple lies outside its family's valid range."""


class DegreeMismatchError(HoffboundError, ValueError):
    pass


class MalformedSpectrumError(HoffboundError, ValueError):
    pass


class CapExceededError(HoffboundError, ValueError):
    def __init__(self, vertex_count, cap):
        self.vertex_count = vertex_count
        self.cap = cap
        super().__init__(
            f"graph has {vertex_count} vertices, above the oracle cap of {cap}"
        )


class NonConvergenceError(HoffboundError, RuntimeError):
    pass
