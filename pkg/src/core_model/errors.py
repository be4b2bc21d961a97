"""
Exception hierarchy shared by every switch-graph module.
"""

from typing import Optional, Sequence


class SwitchGraphError(Exception):
    """Base class for all toolkit errors."""


class ConfigurationError(SwitchGraphError):
    """An environment setting could not be interpreted."""


class InstanceParseError(SwitchGraphError):
    """Instance text does not conform to the grammar."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class InstanceValidationError(SwitchGraphError):
    """A structurally complete instance violates an invariant."""


class NonAcyclicGraphError(InstanceValidationError):
    """The graph has a directed cycle other than a self-loop."""

    def __init__(self, cycle: Sequence[int], message: Optional[str] = None):
        cycle = tuple(cycle)
        super().__init__(
            message or f"graph has a non-self-loop cycle: {' -> '.join(map(str, cycle + cycle[:1]))}"
        )
        self.cycle = cycle


class BudgetExhaustedError(SwitchGraphError):
    """A simulation hit its step budget before deciding."""

    def __init__(self, steps: int, budget: int):
        super().__init__(f"step budget exhausted after {steps} steps (budget {budget})")
        self.steps = steps
        self.budget = budget


class PathEnumerationLimitError(SwitchGraphError):
    """Brute-force path enumeration exceeded its walk limit."""

    def __init__(self, limit: int):
        super().__init__(f"path enumeration exceeded {limit} walks")
        self.limit = limit


class InvariantViolationError(SwitchGraphError):
    """A runtime-checked construction invariant failed."""
