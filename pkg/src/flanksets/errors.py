"""Exception types shared across the toolkit.

Precondition violations derive from ValueError so sloppy call sites fail the
way stdlib code does; resource exhaustion and broken internal cross-checks
derive from RuntimeError.
"""


class FactorizationTimeout(RuntimeError):
    """Raised when the factoring effort budget is exhausted before a full split."""

    def __init__(self, n: int, budget: int):
        super().__init__(f"could not factor {n} within an effort budget of {budget}")
        self.n = n
        self.budget = budget


class CapExceeded(RuntimeError):
    """Raised when a requested index lies above the configured enumeration cap."""


class NotCoprime(ValueError):
    """Raised when a multiplicative order is requested for a non-unit residue."""


class NotPrime(ValueError):
    """Raised when an argument required to be an odd prime is not one."""


class BadShape(ValueError):
    """Raised when an integer does not have the arithmetic shape an operation needs."""


class MechanismViolation(RuntimeError):
    """Raised when a scan result contradicts the structural explanation it must obey."""
