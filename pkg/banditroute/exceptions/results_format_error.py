from typing import Optional


class ResultsFormatError(ValueError):
    """
    Exception raised when a results file cannot be read back, or does not describe the graph it is paired with.

    Args:

        expression (Optional[str]): The file location (path and line) that caused the error.

        message (Optional[str]): An explanation of the error.
    """

    def __init__(self, expression: Optional[str] = None, message: Optional[str] = None) -> None:
        self.expression = expression
        self.message = message or "The results file does not match the graph"
        super().__init__(f"{self.expression}: {self.message}" if expression else self.message)
