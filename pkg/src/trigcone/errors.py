"""
Error Types
Exception hierarchy shared by every trigcone module, with CLI exit categories
"""

from typing import Any, Optional


class TrigConeError(Exception):
    """Base class for all trigcone failures"""

    exit_code = 2


class InputError(TrigConeError, ValueError):
    """Malformed or out-of-domain input"""

    exit_code = 1


class DomainError(InputError):
    """Argument outside the domain of the operation (e.g. reflecting 0)"""


class DegenerateInputError(InputError):
    """Zero polynomial or zero trigonometric polynomial where a nonzero one is required"""


class DegreeDropError(InputError):
    """Leading coefficient vanishes at the declared formal degree"""

    RELATION = "Dis(p_0,...,p_{m-1},0) = p_{m-1}^2 * Dis(p_0,...,p_{m-1})"

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(
            f"{message}; re-declare the formal degree or apply {self.RELATION}"
        )
        self.degree = degree


class PreconditionError(InputError):
    """Caller violated a documented precondition"""


class NumericError(TrigConeError, ArithmeticError):
    """Floating-point pipeline failed"""

    exit_code = 2


class MagnitudeError(NumericError):
    """Value not representable as a finite float"""


class ConvergenceError(NumericError):
    """Iterative method did not converge"""

    def __init__(self, message: str, best_iterate: Any = None, iterations: int = 0):
        super().__init__(message)
        self.best_iterate = best_iterate
        self.iterations = iterations


class ConsistencyError(NumericError):
    """Two independent numeric routes disagree"""


class NotNonnegativeError(NumericError):
    """Factorization met an odd-multiplicity root on the unit circle"""


class ConditioningError(NumericError):
    """Roots could not be paired under the unit-circle reflection"""


class VerificationError(TrigConeError):
    """An identity check failed; carries the offending point"""

    exit_code = 3

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness
