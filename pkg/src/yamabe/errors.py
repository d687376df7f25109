"""Exception hierarchy for the yamabe package.

Every error raised by the library derives from :class:`YamabeError`, so
callers (and the CLI) can catch a single base class. Names describe the
failed precondition, not the module that raised them.
"""


class YamabeError(Exception):
    """Base class for all errors raised by this package."""


# ---------------------------------------------------------------- mesh


class MeshError(YamabeError):
    """Invalid combinatorial data for a closed triangulated surface."""


class BoundaryEdge(MeshError):
    """An edge is contained in a number of faces different from two."""


class DegenerateFace(MeshError):
    """A face repeats a vertex index."""


class DuplicateFace(MeshError):
    """Two faces share all three vertices."""


class Disconnected(MeshError):
    """The 1-skeleton of the triangulation is not connected."""


class NotASurface(MeshError):
    """Euler characteristic is odd or exceeds 2 (not a valid closed surface here)."""


class FlipDegenerate(MeshError):
    """The two faces across the edge to flip have the same apex."""


class FlipCreatesDuplicateEdge(MeshError):
    """The diagonal the flip would insert is already an edge."""


# ------------------------------------------------------------- geometry


class GeometryError(YamabeError):
    """Invalid metric data (triangle inequalities, conformal domain)."""


class DegenerateTriangle(GeometryError):
    """A triangle's relative slack is below the degeneracy tolerance."""


class OutOfConformalDomain(GeometryError):
    """A conformally scaled metric violates a triangle inequality.

    Carries the offending :class:`~yamabe.metric.DomainReport` as ``report``
    when raised by the global metric operations.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PathLeavesDomain(GeometryError):
    """An integration path exits the conformal domain.

    ``t_exit`` is the first parameter value (in [0, 1] along the offending
    segment) found outside the domain.
    """

    def __init__(self, message, t_exit=None, segment=None):
        super().__init__(message)
        self.t_exit = t_exit
        self.segment = segment


# ----------------------------------------------------------------- flow


class FlowError(YamabeError):
    """Failure while integrating the curvature flow."""


class StepUnderflow(FlowError):
    """No step was accepted before the time step fell below dt_min."""


class MaxSurgeriesExceeded(FlowError):
    """The run performed more edge-flip surgeries than allowed."""


class NewMetricOutOfDomain(FlowError):
    """The metric transferred to the post-surgery triangulation is invalid."""


class InsufficientTail(FlowError):
    """Too little decayed trace data to fit a convergence rate."""


# -------------------------------------------------------- admissibility


class AdmissibilityError(YamabeError):
    """Failure while deciding triangulation admissibility."""


class TooLarge(AdmissibilityError):
    """Instance exceeds the size limit of the exhaustive subset check."""


class NotAdmissible(AdmissibilityError):
    """The triangulation admits no constant-curvature assignment."""


# ------------------------------------------------------------------- io


class BadMeshFile(YamabeError):
    """A mesh or lengths file could not be parsed; message carries diagnostics."""


class IoError(YamabeError):
    """An output path could not be written."""
