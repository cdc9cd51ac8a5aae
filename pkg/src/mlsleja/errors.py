"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """A numerical operation failed (singular system, non-convergence, ...)."""


class IndefiniteCovarianceError(NumericalError):
    """A covariance matrix has a significantly negative eigenvalue."""


class EvidenceError(NumericalError):
    """An evidence (ratio) came out non-positive or non-finite."""


class ForwardModelError(NumericalError):
    """A forward solve failed; carries the offending parameter point."""

    def __init__(self, message, theta=None):
        super().__init__(message)
        self.theta = theta


class ConfigError(ValueError):
    """Invalid experiment configuration."""
