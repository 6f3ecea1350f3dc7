"""Exception types shared across the package."""


class TrisolveError(ValueError):
    """Base class for all trisolve errors."""


class InputError(TrisolveError):
    """Malformed input: a value violates a type invariant (non-positive side,
    angle out of range, parts that cannot form any triangle)."""


class DomainError(TrisolveError):
    """A mathematically impossible request, e.g. a third angle when the two
    given angles already sum to 180 degrees or more."""


class PreconditionError(TrisolveError):
    """An operation was called outside its stated precondition; the caller
    must canonicalize first (e.g. relabel so that a >= b)."""
