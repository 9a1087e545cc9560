class ResourceLimitError(RuntimeError):
    """A configured size cap would be exceeded."""


class SearchBudgetExceeded(RuntimeError):
    """A search ran out of nodes before reaching a decision.

    This is not a mathematical answer: the question stays open.
    """


class BudgetError(RuntimeError):
    """No candidate value up to the supplied cap succeeded."""
