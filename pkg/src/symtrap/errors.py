class ConsistencyError(RuntimeError):
    """An internal cross-check failed; results cannot be trusted."""
