"""Exception types shared across the package."""


class GappartsError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(GappartsError, ValueError):
    """A parameter violates a stated validity constraint.

    The message quotes the violated inequality verbatim so failures are
    diagnosable from logs alone.
    """


class MembershipError(GappartsError, ValueError):
    """An operation received a partition outside its declared domain."""


class NotInImageError(GappartsError, ValueError):
    """An inverse map was applied to a partition outside the forward image."""


class RankRangeError(GappartsError, IndexError):
    """An unranking index lies outside [0, count)."""
