"""Exception types shared across the workbench."""


class MVTopologyError(Exception):
    """Base class for all workbench errors."""


class InputError(MVTopologyError):
    """A malformed value or document, or a carrier/chain mismatch."""


class PreconditionError(MVTopologyError):
    """An operation contract was violated; the message names the failed condition."""


class ResourceLimitError(MVTopologyError):
    """A configured size or node cap was exceeded."""

    def __init__(self, message: str, *, limit: int, reached: int):
        super().__init__(f"{message} (cap {limit}, reached {reached})")
        self.limit = limit
        self.reached = reached
