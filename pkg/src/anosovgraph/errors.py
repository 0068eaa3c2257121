"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Malformed graph text/JSON, loop edges, duplicate vertices, unknown labels."""


class PermutationError(ValueError):
    """Malformed cycle notation or a mapping that is not a bijection on the vertices."""


class NotAnAutomorphism(ValueError):
    """A supplied generator does not map edges onto edges."""


class PreconditionViolation(ValueError):
    """An operation was called outside its documented domain (e.g. a linear map
    that does not stabilize the span of edge wedges)."""


class BoundExceeded(RuntimeError):
    """A configured combinatorial bound (group order, component count) was exceeded."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class SeedSearchExhausted(RuntimeError):
    """No certified seed matrix was found within the catalog and search bounds."""

    def __init__(self, message, *, dim, c, entry_bound, candidates_tried):
        super().__init__(message)
        self.dim = dim
        self.c = c
        self.entry_bound = entry_bound
        self.candidates_tried = candidates_tried


class WitnessRefused(RuntimeError):
    """Witness assembly was requested although the decision is not 'yes'."""


class WitnessAssemblyError(RuntimeError):
    """A certificate failed while assembling a witness; names the failing stage."""

    def __init__(self, stage, message):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class OperationCancelled(RuntimeError):
    """Raised by long-running operations when their cancellation token fires."""


class CancelToken:
    """Cooperative cancellation for long-running exact computations.

    Callers hand the token to an operation and may cancel from another
    thread; the operation polls `check()` at loop boundaries.
    """

    __slots__ = ("_cancelled",)

    def __init__(self):
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def check(self) -> None:
        if self._cancelled:
            raise OperationCancelled("operation cancelled by caller")
