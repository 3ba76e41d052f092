"""Exception types shared across the package."""


class BetheCountError(Exception):
    pass


class ValidationError(BetheCountError, ValueError):
    """Bad input: malformed spec, root, twist pattern or arity mismatch."""


class SizeGuardError(BetheCountError):
    """An enumeration would exceed its configured size limit."""


class ConsistencyError(BetheCountError):
    """An internal invariant failed, e.g. a negative multiplicity."""
