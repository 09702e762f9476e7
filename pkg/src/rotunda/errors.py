"""Exception hierarchy.

Everything raised on bad input derives from :class:`RotundaError` (itself a
``ValueError``).  :class:`TheoremViolation` is different in kind: it means an
internal cross-check failed, which is a bug or a counterexample.
"""


class RotundaError(ValueError):
    pass


class ElementError(RotundaError, KeyError):
    """Unknown element label or out-of-range element id."""

    def __str__(self) -> str:  # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class InvalidMatroidError(RotundaError):
    """Construction data does not satisfy the matroid axioms."""


class InputError(RotundaError):
    """Malformed input file; ``where`` names the offending field or position."""

    def __init__(self, message: str, where: str | None = None):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


class EnumerationBoundError(RotundaError):
    """Exhaustive enumeration refused because the input is too large."""


class PreconditionError(RotundaError):
    """An operation's hypothesis does not hold for the given input."""

    condition = "precondition"


class NotModularHyperplaneError(PreconditionError):
    condition = "not-a-modular-hyperplane"


class ElementInHyperplaneError(PreconditionError):
    condition = "element-in-H"


class ParallelElementsError(PreconditionError):
    condition = "parallel-elements"


class NotCircuitError(PreconditionError):
    condition = "not-a-circuit"


class NotChordalError(PreconditionError):
    condition = "not-chordal"


class DisconnectedError(PreconditionError):
    condition = "disconnected"


class NotSupersolvableSaturatedError(PreconditionError):
    condition = "not-supersolvable-saturated"


class NotRotundaBijectionError(PreconditionError):
    condition = "tau-not-bijective-onto-rotunda"


class InvalidDecompositionError(PreconditionError):
    condition = "invalid-decomposition"


class TheoremViolation(AssertionError):
    """A property that the theory guarantees failed on a concrete input."""
