"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A parameter lies outside the admissible range of its family."""


class HypothesisError(ValueError):
    """The inputs are valid but fall outside the range where a result is proven."""


class NoSignChangeError(ValueError):
    """A bracketing interval does not straddle a sign change."""


class ConvergenceError(RuntimeError):
    """An iterative or limiting procedure did not reach its tolerance."""
