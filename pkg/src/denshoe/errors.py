"""Exception hierarchy shared by all denshoe modules."""


class DenshoeError(Exception):
    """Base class for all library errors."""


# --- symbolic words / rotation recovery ---

class BoundaryUndecidable(DenshoeError):
    """A coding point cannot be separated from an arc endpoint at any
    available precision (the offset sits on the coding orbit of a boundary)."""


class WindowTooShort(DenshoeError):
    """Requested factor length exceeds the window length 2N+1."""


class NotSturmian(DenshoeError):
    """Observed factors violate Sturmian complexity or balance."""


# --- circle dynamics / WDS family ---

class RationalAlpha(DenshoeError):
    """An exactly rational rotation angle was supplied where an irrational
    one is required (the coding would be periodic)."""


class NotSaturated(DenshoeError):
    """Window radius could not be grown far enough to observe every factor
    at the requested depth."""


class DegenerateArc(DenshoeError):
    """A cylinder claimed admissible has an empty coding arc."""


class DepthMismatch(DenshoeError):
    """Two order graphs of different depths were compared."""


class NotInMinimalSet(DenshoeError):
    """The point lies in a gap interior, so it has no itinerary."""


# --- variational engine ---

class NoConvergence(DenshoeError):
    """The optimizer failed to reach the gradient tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class TailNotSettled(DenshoeError):
    """Heteroclinic segment endpooints have not converged to the periodic
    orbits within tolerance at the window edges."""


class NotSaddle(DenshoeError):
    """The periodic orbit is not a positive-eigenvalue saddle."""


# --- horseshoe builder ---

class SeedTooLarge(DenshoeError):
    """The linear manifold seed fails the tangency tolerance."""


class NoTransverseIntersection(DenshoeError):
    """No manifold crossing above the transversality threshold."""


class OrderingInconsistent(DenshoeError):
    """Heteroclinic points cannot be ordered consistently along both
    invariant manifolds (wrong branch choice)."""


class RectangleDegenerate(DenshoeError):
    """A rectangle boundary curve fails the cone-tangency check."""


class BudgetExceeded(DenshoeError):
    """Iterate tuning exceeded the configured cap."""


class TemplateMissing(DenshoeError):
    """A mandatory transition of the heteroclinic-cycle template failed
    verification; the partition must be re-tuned."""


class NotAdmissible(DenshoeError):
    """The itinerary word is not admissible for the transition matrix."""


class EmptyClip(DenshoeError):
    """Nested clipping became empty (numerical failure)."""

    def __init__(self, message, depth=None):
        super().__init__(message)
        self.depth = depth


class NoDisjointLoops(DenshoeError):
    """The transition graph is a single cycle; no free pair of loops."""


# --- CLI / reporting ---

class DigestMismatch(DenshoeError):
    """An artifact's content digest does not match its manifest entry."""


class ConfigError(DenshoeError):
    """Invalid or incomplete run configuration."""
