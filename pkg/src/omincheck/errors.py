class InputError(ValueError):
    """Malformed or out-of-range input to a library operation."""


class BudgetError(RuntimeError):
    """A computation was requested beyond its desk-scale budget."""
