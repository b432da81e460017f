"""Exception types raised across the package."""


class PercArchError(Exception):
    """Base class for all package errors."""


class InvalidDimensionsError(PercArchError):
    """Vehicle dimensions violate their physical preconditions."""


class OutOfBoundsError(PercArchError):
    """A grid index or time value falls outside its valid domain."""


class PlacementForbiddenError(PercArchError):
    """Sensor placement attempted on a non-placeable region."""


class EncodingDomainError(PercArchError):
    """A genome cannot be represented under the given search bounds."""


class ShapeError(PercArchError):
    """A vector has the wrong dimensionality."""


class TimeDomainError(PercArchError):
    """A sample time lies outside the drive-cycle duration."""


class CovarianceIntegrityError(PercArchError):
    """A track covariance lost symmetry or positive semi-definiteness."""


class NumericalSingularityError(PercArchError):
    """An innovation covariance is numerically singular."""


class DegenerateGeometryError(PercArchError):
    """A measurement model was evaluated at degenerate geometry (range ~ 0)."""


class ConfigurationError(PercArchError):
    """An optimizer or run configuration violates its invariants."""


class ConfigValidationError(PercArchError):
    """A run-config file failed schema validation; message lists all violations."""


class TableIntegrityError(PercArchError):
    """An embedded data table does not match its pinned digest."""
