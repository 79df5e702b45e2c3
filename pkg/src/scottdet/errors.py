"""Exception types shared across the package."""


class UsageError(ValueError):
    """An argument violates an operation's precondition."""


class DegenerateInstanceError(ValueError):
    """A theorem instance has ``x_k**n == xi**n`` for some k.

    ``index`` holds the offending (k, i, j) triple when known, 1-based.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
