"""Exception types shared across the package."""


class StructureError(Exception):
    """An element set is not closed, not associative, or otherwise malformed."""


class ContractError(Exception):
    """An argument violates a stated precondition (wrong basis, shape, support...)."""


class CapabilityError(Exception):
    """The requested operation exists but is not supported for this input family."""


class SizeCapError(Exception):
    """A predicted object size exceeds the configured cap."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""
