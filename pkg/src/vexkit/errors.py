"""Exception hierarchy shared across the package."""

from __future__ import annotations


class VexkitError(Exception):
    """Base class for every error raised by vexkit."""


class InvalidPermutationError(VexkitError, ValueError):
    pass


class InvalidTripleError(VexkitError, ValueError):
    """Raised when a triple violates monotonicity or inequality (*).

    ``index`` is the 1-based index ``i`` at which the violation was detected
    (for (*), the pair of rows ``i`` and ``i + 1``), or ``None``.
    """

    def __init__(self, message: str, *, field: str | None = None, index: int | None = None):
        super().__init__(message)
        self.field = field
        self.index = index


class InvalidDiagramError(VexkitError, ValueError):
    pass


class NotVexillaryError(VexkitError, ValueError):
    pass


class NotRemovableError(VexkitError, ValueError):
    pass


class NotInsertableError(VexkitError, ValueError):
    pass


class InconsistentVerdictError(VexkitError, AssertionError):
    """Characterizations of vexillarity disagreed. Always a library defect."""


class TransitionCountError(VexkitError, AssertionError):
    pass


class BudgetExceededError(VexkitError, RuntimeError):
    pass


class CapExceededError(VexkitError, ValueError):
    pass
