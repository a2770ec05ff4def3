class PathOverflowError(OverflowError):
    """
    Exception raised when a graph has more simple origin-destination paths than the enumerator was allowed to produce.

    Args:
        max_paths (int): The enumeration limit that was exceeded.
    """

    def __init__(self, max_paths: int) -> None:
        self.max_paths = max_paths
        self.message = f"graph has more than {max_paths} simple origin-destination paths"
        super().__init__(self.message)
