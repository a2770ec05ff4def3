class AggregationError(ValueError):
    """
    Exception raised when run results cannot be aggregated (no results, or per-episode series of unequal length).
    """
