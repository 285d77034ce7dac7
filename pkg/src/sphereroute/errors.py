"""Exception types shared across the package."""


class SphereRouteError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(SphereRouteError):
    """Malformed graph input; the message names the offending line."""


class DisconnectedError(SphereRouteError):
    """Requested terminals do not share a connected component."""


class RuleViolationError(SphereRouteError):
    """A partition rule broke its contract (bad start, growth, or bad anchor)."""


class StalledRuleError(RuleViolationError):
    """The decrement rule returned its input and would loop forever."""


class InvariantError(SphereRouteError):
    """Internal consistency violation; indicates a bug, not bad input."""


class IncompleteRunError(SphereRouteError):
    """An experiment table is missing (problem seed, method, inner seed) cells."""
