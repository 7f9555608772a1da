"""Exception types shared across the package."""


class RoadColorError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraph(RoadColorError):
    """A graph is structurally malformed (e.g. a target id out of range).

    ``edge`` identifies the offending edge as ``(source, slot)`` when known.
    """

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge


class InvalidColoring(RoadColorError):
    """A coloring violates determinism or does not match the graph's arity."""


class IncompleteColoring(RoadColorError):
    """An operation needing one edge of a given color per vertex found none."""


class ParseError(RoadColorError):
    """A text input could not be parsed; ``line_no`` is 1-based."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class NotStronglyConnected(RoadColorError):
    """The operation requires a strongly connected graph or component."""


class NotUniform(RoadColorError):
    """The operation requires a uniform outdegree."""


class NoValidColoring(RoadColorError):
    """No synchronizing coloring exists under this package's restrictions."""


class NotSupported(RoadColorError):
    """The instance is outside the supported fragment (non-uniform sink)."""


class NotCongruent(RoadColorError):
    """A partition fails the congruence requirement for the given coloring."""


class BadWord(RoadColorError):
    """A word contains a color outside the automaton's alphabet."""


class TooLarge(RoadColorError):
    """The instance exceeds the exact oracle's state-count guard."""


class NotAchievable(RoadColorError):
    """No word realizing the claimed image size could be constructed."""


class GenerationFailed(RoadColorError):
    """Random instance generation exhausted its retry budget."""


class Inapplicable(RoadColorError):
    """A shortcut branch was invoked on a graph it does not apply to."""


class BaseCase(RoadColorError):
    """Signal: the graph is a cycle of bunches; any coloring already works."""


class InternalError(RoadColorError):
    """Algorithm-bug sentinel: an emitted pair failed independent checks."""
