from typing import Optional


class DeadEndError(RuntimeError):
    """
    Exception raised when a learner arrives at a non-destination node that has no outgoing edges, which can only happen
    when the graph handed to it was never validated.
    """

    def __init__(self, node: int, message: Optional[str] = None) -> None:
        self.node = node
        self.message = message or f"node {node} has no outgoing edges and is not the destination"
        super().__init__(self.message)
