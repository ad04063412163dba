from typing import Optional


class DistortedFourierError(Exception):
    pass


class ConfigurationError(DistortedFourierError):
    pass


class ShapeMismatchError(DistortedFourierError):
    pass


class DomainError(DistortedFourierError):
    pass


class NumericError(DistortedFourierError):
    pass


class RangeError(DistortedFourierError):
    pass


class DegenerateInputError(DistortedFourierError):
    pass


class SchemaVersionError(DistortedFourierError):
    pass


class BlowupError(DistortedFourierError):
    def __init__(self, time: float, message: Optional[str] = None):
        self.time = time
        super().__init__(message or f"Non-finite values in the nonlinear substep at t={time:.6g}")


class BoundaryContaminationError(DistortedFourierError):
    def __init__(self, time: float, mass_fraction: float):
        self.time = time
        self.mass_fraction = mass_fraction
        super().__init__(f"Boundary mass fraction {mass_fraction:.3e} at t={time:.6g} exceeds the allowed share")


class BudgetExceededError(DistortedFourierError):
    def __init__(self, message: str, best_error: float = float("nan")):
        self.best_error = best_error
        super().__init__(f"{message} (best achieved error {best_error:.3e})")


class PipelineError(DistortedFourierError):
    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"Stage `{stage}` failed: {cause}")
