"""Exception types shared across the package."""


class AmbientMismatchError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class DomainError(ValueError):
    """A mathematical precondition is violated (zero/unit ideal where a
    proper one is required, non-artinian input to an artinian-only
    computation, non-Borel-type input to a chain computation, ...)."""


class BoundExceededError(RuntimeError):
    """A degree scan ran past its a-priori bound.  Scans never extend
    silently; tripping the guard means the finite-length assumption of the
    computation does not hold for the given input (or a bug)."""


class ParseError(ValueError):
    """Syntax error in the expression language, annotated with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
