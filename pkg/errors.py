from typing import Optional


class DuopolyError(Exception):
    pass


class OutOfInterior(DuopolyError):
    """One firm captures the whole line; the split formulas hold only for an interior consumer"""
    pass


class InvalidLocations(DuopolyError, ValueError):
    pass


class InvalidStep(DuopolyError, ValueError):
    pass


class ConvergenceError(DuopolyError):
    def __init__(self, message: str, iterations: int, delta: Optional[float] = None):
        super().__init__(message)
        self.iterations = iterations
        self.delta = delta


class SearchError(DuopolyError):
    pass


class ScheduleError(DuopolyError, ValueError):
    pass


class InvalidGameError(DuopolyError, ValueError):
    pass


class MultipleEquilibriaError(DuopolyError):
    pass


class UnmodeledOutcomeError(DuopolyError):
    pass


class TrajectoryTooShort(DuopolyError, ValueError):
    pass


class ConfigError(DuopolyError):
    pass
