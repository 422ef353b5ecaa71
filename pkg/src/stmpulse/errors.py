"""Exception hierarchy. CLI maps these onto exit codes."""


class StmPulseError(Exception):
    """Base class for all package errors."""


class ConfigError(StmPulseError):
    """Invalid or inconsistent run configuration (exit code 2)."""


class GeometryError(StmPulseError):
    """Ill-formed geometry, e.g. overlapping atoms."""


class ConstructionError(StmPulseError):
    """Model assembly failed an internal consistency check."""


class EmbeddingError(StmPulseError):
    """Surface Green's function / self-energy did not converge (exit code 4)."""


class FitQualityError(StmPulseError):
    """Lorentzian fit residual above the configured threshold (exit code 3)."""


class IntegrationError(StmPulseError):
    """Energy quadrature failed to converge (exit code 3)."""


class InstabilityError(StmPulseError):
    """Time propagation left the physical occupation range (exit code 3)."""


class SchemaError(StmPulseError):
    """A trace or CSV artifact is missing required columns."""
