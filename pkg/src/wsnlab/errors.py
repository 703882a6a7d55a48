"""Exception types shared across the package."""


class WsnLabError(Exception):
    """Base class for all package errors."""


class ConfigError(WsnLabError):
    """A configuration, world, or topology input is structurally invalid."""


class DataFormatError(WsnLabError):
    """An artifact file (CSV/JSON) could not be parsed."""


class ZeroVarianceError(WsnLabError):
    """A series (or its element-wise square) is constant."""


class InsufficientDataError(WsnLabError):
    """Too few samples for the requested statistic."""


class UnderdeterminedError(WsnLabError):
    """Fewer rows than fitted coefficients."""


class RankDeficiencyError(WsnLabError):
    """The design matrix is singular or numerically rank deficient."""

    def __init__(self, message: str, columns: list[str] | None = None):
        super().__init__(message)
        self.columns = columns or []
