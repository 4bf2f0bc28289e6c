"""Forge-specific exceptions with detailed error information."""

from typing import Optional


class ForgeError(Exception):
    """Base exception for tutte-forge errors."""

    def __init__(self, message: str, recoverable: bool = False):
        super().__init__(message)
        self.recoverable = recoverable


class InvalidReferenceError(ForgeError):
    """A vertex or edge id does not exist in the graph it was used with."""

    def __init__(self, kind: str, ref: object, graph_name: Optional[str] = None):
        self.kind = kind
        self.ref = ref
        self.graph_name = graph_name

        message = f"Unknown {kind} {ref!r}"
        if graph_name:
            message += f" in graph '{graph_name}'"

        super().__init__(message)


class GraphFormatError(ForgeError):
    """Text graph or witness document could not be parsed."""

    def __init__(self, reason: str, line: Optional[int] = None, path: Optional[str] = None):
        self.reason = reason
        self.line = line
        self.path = path

        message = f"Format error: {reason}"
        if line is not None:
            message += f" (line {line})"
        if path:
            message += f" (in {path})"

        super().__init__(message)


class PolynomialParseError(ForgeError):
    """Canonical polynomial text is malformed."""

    def __init__(self, reason: str, position: int):
        self.reason = reason
        self.position = position
        super().__init__(f"Cannot parse polynomial at position {position}: {reason}")


class OracleLimitError(ForgeError):
    """Subset expansion refused a graph with too many edges."""

    def __init__(self, edge_count: int, limit: int):
        self.edge_count = edge_count
        self.limit = limit
        super().__init__(
            f"Subset expansion needs 2^{edge_count} terms; "
            f"edge limit is {limit}"
        )


class SizeLimitError(ForgeError):
    """Isomorphism search refused a graph above the vertex limit."""

    def __init__(self, vertex_count: int, limit: int):
        self.vertex_count = vertex_count
        self.limit = limit
        super().__init__(
            f"Graph has {vertex_count} vertices; isomorphism limit is {limit}"
        )


class PreconditionError(ForgeError):
    """An operation was called on input it is not defined for."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Precondition failed: {reason}")


class ArityError(ForgeError):
    """Two ordered vertex lists (or a list and a cycle) differ in length."""

    def __init__(self, what: str, expected: int, actual: int):
        self.what = what
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what}: expected {expected}, got {actual}")


class InvalidCutError(ForgeError):
    """A Whitney twist side is not separated from the rest by the cut."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid 2-cut: {reason}")


class HypothesisError(ForgeError):
    """A construction's hypothesis (orbit, reflection, W0 conditions) fails."""

    def __init__(self, reason: str, violations: Optional[list[str]] = None):
        self.reason = reason
        self.violations = violations or []

        message = f"Hypothesis not satisfied: {reason}"
        if self.violations:
            message += f" ({'; '.join(self.violations)})"

        super().__init__(message, recoverable=True)


class BudgetError(ForgeError):
    """Number of instances to check exceeds the configured work budget."""

    def __init__(self, what: str, count: int, budget: int):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(f"{what}: {count} instances exceed the budget of {budget}")


class IdentityViolationError(ForgeError):
    """Both sides of an identity that always holds were found to differ."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Identity violated: {reason}")


class FalsifiedPropositionError(ForgeError):
    """A structural property of the D_psi digraph failed on a valid witness."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Falsified proposition: {reason}")


class ConfigurationError(ForgeError):
    """Configuration file, environment override or value is invalid."""

    def __init__(self, reason: str, file_path: Optional[str] = None):
        self.file_path = file_path
        self.reason = reason

        message = f"Configuration error: {reason}"
        if file_path:
            message += f" (in {file_path})"

        super().__init__(message)
