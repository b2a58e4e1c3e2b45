"""Exception hierarchy.

Every error carries its class name as the invariant that failed, which the
CLI prints verbatim.
"""

__all__ = [
    "NLBoundsError",
    "GraphError",
    "DuplicateEdge",
    "SelfLoop",
    "Disconnected",
    "IsolatedVertex",
    "VertexOutOfRange",
    "ParseError",
    "NotGraphical",
    "NotPendantForm",
    "StarGraph",
    "OrderingPremiseViolated",
    "DegenerateCase",
    "NoConvergence",
    "NotApplicable",
    "GuardViolated",
    "RetriesExhausted",
    "InvalidRing",
    "SoundnessViolation",
]


class NLBoundsError(ValueError):
    """Base class for all library errors."""


class GraphError(NLBoundsError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class IsolatedVertex(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class ParseError(GraphError):
    pass


class NotGraphical(GraphError):
    pass


class NotPendantForm(NLBoundsError):
    pass


class StarGraph(NLBoundsError):
    pass


class OrderingPremiseViolated(NLBoundsError):
    pass


class DegenerateCase(NLBoundsError):
    pass


class NoConvergence(NLBoundsError, RuntimeError):
    pass


class NotApplicable(NLBoundsError):
    """A bound's preconditions do not hold for the given inputs."""


class GuardViolated(NotApplicable):
    pass


class RetriesExhausted(NLBoundsError, RuntimeError):
    pass


class InvalidRing(NLBoundsError):
    pass


class SoundnessViolation(NLBoundsError, AssertionError):
    """A bound that claims to apply is contradicted by the exact value."""
