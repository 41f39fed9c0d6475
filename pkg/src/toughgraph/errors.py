"""Exception types shared across the package."""


class ToughgraphError(Exception):
    """Base class for all package-specific errors."""


class Graph6Error(ToughgraphError, ValueError):
    """Malformed graph6 input. Carries the byte offset of the offending byte."""

    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = ""
        if line is not None:
            where += f" (line {line})"
        if offset is not None:
            where += f" (byte offset {offset})"
        super().__init__(message + where)


class UnsupportedSizeError(ToughgraphError, ValueError):
    """Graph larger than an operation supports (graph6 caps at 62 vertices)."""


class PreconditionError(ToughgraphError, ValueError):
    """An operation's precondition failed. May carry a structural witness."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ResourceBudgetError(ToughgraphError, RuntimeError):
    """A configured size or work budget was exceeded; reports what was needed."""

    def __init__(self, message, required=None, budget=None):
        self.required = required
        self.budget = budget
        super().__init__(message)


class FalsificationError(ToughgraphError, AssertionError):
    """A theorem-backed guarantee failed on a concrete graph.

    This should never fire; if it does, the attached reproducer (graph6
    string plus parameters) pins down either an implementation bug or a
    genuine counterexample, and either one deserves loud failure.
    """

    def __init__(self, message, graph6=None, params=None):
        self.graph6 = graph6
        self.params = params
        detail = ""
        if graph6 is not None:
            detail += f" [reproducer graph6: {graph6!r}]"
        if params:
            detail += f" [params: {params!r}]"
        super().__init__(message + detail)
