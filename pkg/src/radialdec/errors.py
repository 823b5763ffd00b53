"""Exception types raised by the library."""


class InvalidOrderError(ValueError):
    """Spherical-harmonic order m outside [-n, n]."""


class UnsupportedGridError(ValueError):
    """Requested Lebedev node count is not in the supported table."""


class PoleProximityError(ValueError):
    """Polar-angle evaluation requested inside the pole exclusion band."""


class NotRadialError(ValueError):
    """Radial function is not strictly positive at every grid node."""


class DegenerateFrameError(ValueError):
    """Metric conditioning too poor to invert the tangent frame."""


class FormDegreeError(ValueError):
    """Operation applied to a differential form of the wrong degree."""


class NearSingularError(RuntimeError):
    """Pinned Galerkin system is numerically singular."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class GoldenDataError(RuntimeError):
    """Golden data file missing, malformed, or failing its integrity hash."""
