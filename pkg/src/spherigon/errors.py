"""Exception hierarchy shared by the geometry, analytic and CLI layers."""


class SpherigonError(Exception):
    """Base class for every error raised by this package."""


class DegenerateArc(SpherigonError):
    pass


class PoleProjection(SpherigonError):
    pass


class CoplanarArcs(SpherigonError):
    pass


class NonConvex(SpherigonError):
    pass


class DegenerateLune(SpherigonError):
    pass


class InvalidSampleCount(SpherigonError):
    pass


class InvalidPolygon(SpherigonError):
    """Vertex list violates the polygon invariants (count, unit norm, duplicates)."""


class DomainError(SpherigonError, ValueError):
    """Argument outside the open interval a scalar function is defined on."""


class EvenGon(DomainError):
    pass


class NotReducedGeometry(SpherigonError):
    pass


class InvariantViolation(SpherigonError):
    """An identity that must hold by construction failed numerically."""


class SolverDiverged(SpherigonError):
    pass


class RelativeInteriorViolated(SpherigonError):
    pass
