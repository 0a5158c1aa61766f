"""Exception types shared across the package."""


class InputError(ValueError):
    """Rejected input: dimension mismatch, non-finite values, or bad domain."""


class PoisonedTeacherError(InputError):
    """Teacher produced a non-finite pseudo-label; carries the offending row."""

    def __init__(self, row: int, value: float):
        self.row = row
        self.value = value
        super().__init__(f"teacher returned non-finite value {value!r} at row {row}")


class DivergenceError(RuntimeError):
    """Training produced a non-finite or exploding loss; carries the epoch."""

    def __init__(self, epoch: int, message: str):
        self.epoch = epoch
        super().__init__(f"run diverged at epoch {epoch}: {message}")


class ConfigError(ValueError):
    """Invalid or unknown configuration key/value."""
