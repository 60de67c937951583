"""Exception types raised across the toolkit.

The CLI maps these onto exit codes: input-side errors exit 2, numeric
breakdowns exit 3.
"""


class HyperenergyError(Exception):
    """Base class for every deliberate error in this package."""


class InvalidParams(HyperenergyError):
    """Arguments violate a documented precondition."""


class EdgeWrongSize(HyperenergyError):
    """An edge does not consist of exactly k distinct vertices."""


class VertexOutOfRange(HyperenergyError):
    """An edge references a vertex index outside [0, n)."""


class DuplicateEdge(HyperenergyError):
    """The same edge appears twice (edge sets have set semantics)."""


class EdgeNotFound(HyperenergyError):
    """Attempt to remove an edge that is not present."""


class TooManyEdges(HyperenergyError):
    """A generated or complemented hypergraph would exceed the edge limit."""


class EmptyHypergraph(HyperenergyError):
    """The construction requires at least one edge."""


class InvalidPowerParams(HyperenergyError):
    """Power-hypergraph parameters must satisfy s >= 1 and r >= k*s."""


class ParseError(HyperenergyError):
    """Malformed `.hg` input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NoConvergence(HyperenergyError):
    """The eigensolver hit its sweep cap before reaching the off-norm target."""


class NegativeGramEigenvalue(HyperenergyError):
    """A Gram matrix produced an eigenvalue more negative than roundoff allows."""


class ParityViolation(HyperenergyError):
    """A detected-integer incidence energy contradicts its parity law."""
