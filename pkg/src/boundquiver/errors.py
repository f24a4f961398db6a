"""Exception classes.

``InputError`` subclasses signal a malformed request (CLI exit status 2);
``ComputationError`` subclasses signal that a well-formed request could not
be answered (CLI exit status 1).
"""


class BoundQuiverError(Exception):
    pass


class InputError(BoundQuiverError):
    pass


class ComputationError(BoundQuiverError):
    pass


class PresentationError(InputError):
    """Invalid quiver presentation (dangling vertex, bad relation, ...)."""


class AdmissibilityError(PresentationError):
    """A relation contains a path of length 0 or 1."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class UnknownTag(InputError):
    pass


class NotFiniteDimensional(ComputationError):
    pass


class DecompositionInconclusive(ComputationError):
    """No splitting endomorphism found although End(M)/rad has dimension > 1."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class BudgetExceeded(ComputationError):
    pass


class Unresolved(ComputationError):
    pass


class DimensionMismatch(ComputationError):
    pass


class PreconditionUnmet(ComputationError):
    def __init__(self, message: str, classification=None):
        super().__init__(message)
        self.classification = classification


class HypothesisUnmet(ComputationError):
    def __init__(self, hypothesis: str):
        super().__init__(f"hypothesis unmet: {hypothesis}")
        self.hypothesis = hypothesis


class IndecomposablesUnavailable(ComputationError):
    pass


class NotNakayama(ComputationError):
    pass


class AtlasIncomplete(ComputationError):
    pass


class NotExact(ComputationError):
    pass
