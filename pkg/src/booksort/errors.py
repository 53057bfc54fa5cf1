"""Shared exception types for the booksort package."""


class BooksortError(Exception):
    """Base class for all domain errors raised by this package."""


class OperationRejectedError(BooksortError):
    """An elementary transposition does not match the density it was applied to.

    Carries the first offending subinterval so callers can report exactly
    where the required block pattern broke down.
    """

    def __init__(self, op, lo, hi, expected, found):
        self.op = op
        self.lo = lo
        self.hi = hi
        self.expected = expected
        self.found = found
        super().__init__(
            f"operation (y={op.y}, a={op.a}, b={op.b}) rejected: expected value "
            f"{expected} on ({lo}, {hi}) but found {found}"
        )


class PlanError(BooksortError):
    """A plan failed to replay: a bad move, or a wrong final state.

    ``step`` is the 1-based index of the offending move, or None when the
    problem is with the final state rather than a particular move.
    """

    def __init__(self, step, message):
        self.step = step
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(prefix + message)


class NotMixedError(BooksortError):
    """A density failed a mixing-window requirement imposed by the caller."""


class CapacityError(BooksortError):
    """An exhaustive computation exceeds the configured size guard."""
