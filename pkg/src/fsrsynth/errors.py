"""Exception types raised by fsrsynth."""

from __future__ import annotations


class FSRError(Exception):
    """Base class for all library errors."""


class NonInvertibleError(FSRError, ArithmeticError):
    """Inverse requested for a residue that is not a unit."""


class ZeroDecompositionError(FSRError, ArithmeticError):
    """Unit-power decomposition requested for zero."""


class ZeroVectorError(FSRError, ValueError):
    """Leading data requested for the zero polynomial vector."""


class ModeMismatchError(FSRError, ValueError):
    """Synthesis mode incompatible with the modulus or the requested operation."""


class InvariantError(FSRError, AssertionError):
    """An algorithm invariant failed. Always an implementation bug, never bad input."""


class OrderingError(FSRError, ValueError):
    """Rows are not in the ordering an operation requires."""


class TruncationError(FSRError):
    """An enumeration exceeded its cap.

    ``partial`` holds the first ``cap`` results in deterministic order and
    ``total`` the number of parameter tuples that would have been enumerated.
    """

    def __init__(self, total: int, cap: int, partial: tuple = ()):
        super().__init__(f"enumeration of {total} combinations exceeds cap {cap}")
        self.total = total
        self.cap = cap
        self.partial = partial


class OracleCostError(FSRError):
    """Brute-force search would exceed its feasibility guard."""
