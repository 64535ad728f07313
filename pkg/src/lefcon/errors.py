"""Exception hierarchy shared by all lefcon modules.

``InputError`` subclasses signal malformed or inapplicable input (CLI exit
code 2), ``TopologyError`` subclasses signal that a geometric precondition
failed on otherwise well-formed data, and ``SoundnessViolationError`` marks
the one condition that must never occur: a nonzero certificate whose oracle
cross-check found nothing (CLI exit code 3).
"""


class LefconError(Exception):
    pass


class InputError(LefconError):
    pass


class FaceClosureError(InputError):
    """A declared complex is not closed under taking faces."""


class SubcomplexError(InputError):
    """The sub part of a pair contains a simplex absent from the total."""


class VertexOrderError(InputError):
    """A simplex tuple is not strictly increasing in the vertex order."""


class InvalidMapError(InputError):
    """A vertex assignment is not simplicial or violates the pair condition."""


class DimensionError(InputError):
    """Mismatched degrees or matrix shapes."""


class WorkspaceError(InputError):
    """Syntax or reference error in a workspace document."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class SphereSignatureError(InputError):
    """State space does not carry sphere homology."""


class BoundaryConditionError(InputError):
    """System map does not keep the state boundary invariant, so the
    controllability certificate is inapplicable (distinct from `False`)."""


class TopologyError(LefconError):
    pass


class NonManifoldError(TopologyError):
    """Top-dimensional structure is not that of a manifold with boundary."""


class NonOrientableError(TopologyError):
    """Orientation propagation met a contradiction."""


class DisconnectedError(TopologyError):
    """Top-dimensional skeleton is not connected."""


class SingularDualityError(TopologyError):
    """Duality matrix is not invertible; the oriented-manifold input is bad."""


class SoundnessViolationError(LefconError):
    """Nonzero certificate contradicted by its oracle. Must never happen."""
