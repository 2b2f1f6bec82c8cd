"""Exception types shared across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class NegativePrecision(ValueError):
    pass


class ParseError(ValueError):
    pass


class InvalidWitness(ValueError):
    """A supplied certificate failed its re-check."""


class OutOfInterval(ValueError):
    pass


class EnumerationExhausted(LookupError):
    """Fewer halting programs were discovered than a term index requires."""

    def __init__(self, needed: int, found: int):
        self.needed = needed
        self.found = found
        super().__init__(
            f"term index needs {needed} discovered halters, only {found} found "
            f"(short by {needed - found}); raise index_bound or budget"
        )


class NoInitialGap(Exception):
    """The endpoint images could not be separated within the gap fuel."""


class StepStalled(Exception):
    """Neither half of a bisection step could be certified.

    ``trace`` holds the steps completed before the stall.
    """

    def __init__(self, step: int, trace):
        self.step = step
        self.trace = trace
        super().__init__(f"bisection stalled at step {step}")
