class QuiverError(ValueError):
    """Malformed quiver description."""


class PathError(ValueError):
    """Invalid path operation (bad index, non-parallel substitution, ...)."""


class BudgetExceeded(RuntimeError):
    """A basis or table grew past the configured size limit."""

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what}: size {size} exceeds budget {budget}")
        self.what = what
        self.size = size
        self.budget = budget
