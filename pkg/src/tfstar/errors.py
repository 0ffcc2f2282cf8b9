"""Exception types shared across the package."""


class TfStarError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TfStarError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ContractViolation(TfStarError):
    """A documented precondition was violated by the caller."""


class NamesIncomparable(TfStarError):
    """Two monomial names do not differ by a nonnegative product of gold pairs.

    This is the normal signal that a candidate differential or extension does
    not exist; callers that expect comparability must treat it as an error.
    """


class EngineInvariantError(TfStarError):
    """The spectral-sequence engine reached a state its invariants forbid.

    This is a bug indicator, not a user error; the message carries the page
    state that produced it.
    """


class SearchSpaceExceeded(TfStarError):
    """An exhaustive search would exceed the configured resource ceiling."""

    def __init__(self, message: str, estimate: int):
        super().__init__(f"{message} (estimated size {estimate})")
        self.estimate = estimate
