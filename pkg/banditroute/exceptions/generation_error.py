class GenerationError(RuntimeError):
    """
    Exception raised when the network generator cannot produce a valid graph within the allowed number of repair
    attempts.

    Args:
        attempts (int): The number of repair passes that were made.
        message (str): An explanation of what remained invalid.
    """

    def __init__(self, attempts: int, message: str = "generated network is still invalid") -> None:
        self.attempts = attempts
        self.message = f"{message} after {attempts} repair attempts"
        super().__init__(self.message)
