"""Exception types shared across the package."""


class VmkitError(Exception):
    """Base class for all vmkit errors."""


class InvalidVertexError(VmkitError):
    """A vertex label is not present in the graph."""


class NotAnEdgeError(VmkitError):
    """Pivoting requires an existing edge."""


class GenerationError(VmkitError):
    """Unknown graph family or invalid generator parameters."""


class CompositionError(VmkitError):
    """Half-graph composition got incompatible operands."""


class Graph6Error(VmkitError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class BudgetError(VmkitError):
    """An exact computation was requested beyond its configured cap."""


class InvalidNodeError(VmkitError):
    """The node is not usable for this decomposition operation."""


class DecompositionError(VmkitError):
    """A tree/bijection pair violates the decomposition invariants."""


class BalanceError(VmkitError):
    """Balance-partition precondition or postcondition failure."""


class MergeError(VmkitError):
    """Merge construction precondition or postcondition failure."""


class InvalidElementError(VmkitError):
    """A matroid element label is not present in the ground set."""


class InvalidBasisError(VmkitError):
    """The given element set is not a basis of the matroid."""
