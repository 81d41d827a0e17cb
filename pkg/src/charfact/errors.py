"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ShapeError(ValueError):
    """A matrix or sequence has the wrong dimensions."""


class PartitionError(ValueError):
    """A tuple fails the partition / half-partition rules."""


class UnsupportedError(ValueError):
    """No brute-force oracle exists for the requested family or size."""
