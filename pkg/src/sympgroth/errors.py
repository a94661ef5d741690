"""Exception types raised across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (shape, sign, symmetry...)."""


class ConsistencyError(RuntimeError):
    """A numerical consistency check between intermediate objects failed."""


class CapacityError(RuntimeError):
    """The requested exact computation is beyond the configured size limit."""
