class AlphabetError(ValueError):
    """A letter does not belong to the alphabet, or two words disagree on it."""


class BudgetExceeded(RuntimeError):
    """An enumeration or materialization would exceed its configured cap."""

    def __init__(self, what, required, limit):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(f"{what}: requires {required}, budget is {limit}")


class NotUniversalError(ValueError):
    """Raised by operations that need iota(w) >= 1."""


class Falsified(AssertionError):
    """A checked statement failed on a concrete word.

    Everything checked here is a proven statement, so this always means an
    implementation bug.
    """

    def __init__(self, claim, word, expected, actual):
        self.claim = claim
        self.word = word
        self.expected = expected
        self.actual = actual
        super().__init__(f"{claim} failed on {word!r}: expected {expected!r}, got {actual!r}")
