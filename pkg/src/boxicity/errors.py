class InputError(ValueError):
    """Malformed or out-of-contract input."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A search ran past its work budget. Raised instead of returning a partial answer."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"work budget of {budget} prefix extensions exceeded")
