class DomainError(ValueError):
    """A mathematical precondition of an operation is violated."""


class ConjugacyInstabilityError(RuntimeError):
    """Capped conjugation search failed to stabilize under repeated cap
    doubling; the partition cannot be trusted and is not returned."""
