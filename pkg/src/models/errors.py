"""
Exception types for HarmoniTree.

All domain errors derive from ValueError so callers can treat bad input uniformly.
"""


class FuncMapError(ValueError):
    """Exception raised when a table is not a valid map Z_n -> Z_n."""

    def __init__(self, message: str, index: int = None):
        super().__init__(message)
        self.index = index


class PermutationError(FuncMapError):
    """Exception raised when a table is not a bijection of Z_n."""
    pass


class LimitExceededError(ValueError):
    """Exception raised when an exhaustive procedure is asked for n above its cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what} refused: n={n} exceeds cap {cap}")
        self.n = n
        self.cap = cap


class PreconditionError(ValueError):
    """Exception raised when an operation's documented precondition does not hold."""
    pass


class NotHarmoniousError(PreconditionError):
    """Exception raised when a labeled graph was required to be harmonious."""
    pass


class UnsupportedModulusError(ValueError):
    """Exception raised for moduli an operation does not handle (even n where 2 is a zero divisor)."""
    pass
