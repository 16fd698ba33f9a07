class BudgetExceeded(Exception):
    """An enumeration would visit more objects than allowed.

    ``count`` holds the exact number that would have been visited.
    """

    def __init__(self, what: str, count: int):
        super().__init__(f"budget exceeded: {what} (exact count {count})")
        self.count = count


class ContradictionError(RuntimeError):
    """A computed object violates a proven structural theorem.

    Raised only when something is wrong with the library or its inputs were
    corrupted in a way validation did not catch.
    """


class NotATWError(ValueError):
    """An operation that needs an antipodal two-weight code got something else."""
