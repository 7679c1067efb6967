"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so deciders and parsers
raise these rather than bare ValueError where the distinction matters.
"""


class CapExceededError(ValueError):
    """An input exceeds a configured size cap (dimension, width, subsets)."""


class ParseError(ValueError):
    """A state / subset / circuit / instance file failed to parse."""


class ClaimRejectedError(ValueError):
    """A claimed acceptance probability below 2/3 was rejected up front."""


class RewindPreconditionError(ValueError):
    """The wrapped verifier's optimum is not exactly 1/2.

    Carries the exact optimum so callers can report it.
    """

    def __init__(self, optimum):
        self.optimum = optimum
        super().__init__(
            f"wrapped optimum is {optimum}, rewinding requires exactly 1/2"
        )
