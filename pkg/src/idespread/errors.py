"""Exception types shared across the package."""


class SpreadModelError(Exception):
    """Base class for all package-specific failures."""


class DomainError(SpreadModelError, ValueError):
    """An argument lies outside the mathematical domain of an operation.

    For moment generating functions with a bounded domain, ``interval``
    carries the admissible open interval for the exponent.
    """

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class ContractionViolated(SpreadModelError):
    """The sedentary update is not a sup-norm contraction.

    Raised before iterating whenever s*(1-p_A) + (1-p_J)*k*r >= 1, in
    which case the fixed-point solve has no convergence guarantee.
    """

    def __init__(self, constant):
        super().__init__(
            f"contraction condition violated: s*(1-p_A) + (1-p_J)*k*r = "
            f"{constant:.6g} >= 1"
        )
        self.constant = constant


class NoConvergence(SpreadModelError):
    """An iteration exhausted its budget before reaching tolerance."""

    def __init__(self, message, iterations, final_increment):
        super().__init__(
            f"{message} (iterations={iterations}, "
            f"final increment={final_increment:.3e})"
        )
        self.iterations = iterations
        self.final_increment = final_increment


class DegenerateWave(SpreadModelError):
    """The wave iteration collapsed to 0 or saturated at capacity.

    ``mode`` is "collapse" or "saturation"; saturation is the numerical
    symptom of requesting a speed below the minimal wave speed.
    """

    def __init__(self, mode, detail=""):
        message = f"degenerate wave profile ({mode})"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.mode = mode


class MinimizerAtBoundary(SpreadModelError):
    """The speed minimization ended on the edge of the search interval."""

    def __init__(self, mu, speed, side):
        super().__init__(
            f"speed minimizer sits at the {side} edge of the exponent "
            f"interval (mu={mu:.6g}, c={speed:.6g}); the infimum may not "
            f"be attained on the searched interval"
        )
        self.mu = mu
        self.speed = speed
        self.side = side


class LevelNotCrossed(SpreadModelError):
    """A density profile never crosses the requested tracking level."""

    def __init__(self, level, generation=None):
        where = "" if generation is None else f" at generation {generation}"
        super().__init__(f"profile does not cross level {level:.6g}{where}")
        self.level = level
        self.generation = generation


class ConfigError(SpreadModelError):
    """A run configuration failed to parse or validate."""

    def __init__(self, message, field=None):
        if field:
            message = f"{field}: {message}"
        super().__init__(message)
        self.field = field
