"""Exception hierarchy shared by every module.

CLI exit codes are keyed off these classes: ``CapacityError`` and
``SizeCapError`` map to 2, ``NumericalFailure`` to 3, and every other
``IlttError`` to 1.
"""

from __future__ import annotations


class IlttError(Exception):
    """Base class for domain errors."""


class InvalidOrderError(IlttError, ValueError):
    pass


class InvalidTournamentError(IlttError, ValueError):
    """Raised when a relation is not a tournament (loops, missing or doubled pairs)."""


class InvalidSelectionError(IlttError, ValueError):
    pass


class InvalidComparisonError(IlttError, ValueError):
    pass


class OutOfDomainError(IlttError, ValueError):
    pass


class SizeCapError(IlttError):
    """An exact or dense algorithm was asked to run above its order cap."""

    def __init__(self, what: str, order: int, cap: int):
        super().__init__(f"{what}: order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class CapacityError(IlttError):
    """Generation would exceed the node cap.

    ``required_cap`` is the smallest cap under which the request would succeed.
    """

    def __init__(self, required_cap: int, cap: int):
        super().__init__(
            f"requested tournament needs {required_cap} nodes, node cap is {cap} "
            f"(rerun with --cap {required_cap} or ILTT_NODE_CAP={required_cap})"
        )
        self.required_cap = required_cap
        self.cap = cap


class ParseError(IlttError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class NoCycleError(IlttError):
    pass


class InvalidCycleError(IlttError, ValueError):
    pass


class InvalidFlipError(IlttError, ValueError):
    pass


class NumericalFailure(IlttError, ArithmeticError):
    """Eigensolver did not converge; ``diagnostics`` holds iteration counters."""

    def __init__(self, message: str, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class DominationDiscrepancy(IlttError):
    """A dominating-set lifting/projection produced a set that fails validation."""

    def __init__(self, message: str, nodes, kind: str, step: int):
        super().__init__(message)
        self.nodes = tuple(nodes)
        self.kind = kind
        self.step = step
