from typing import Optional

from banditroute.data.enums import GraphInvariant


class GraphValidationError(ValueError):
    """
    Exception raised when a well-formed graph violates one of the structural invariants in `GraphInvariant`.

    Args:
        invariant (GraphInvariant): The first invariant found to be violated.
        detail (Optional[str]): Context such as the offending edge or node.
    """

    def __init__(self, invariant: GraphInvariant, detail: Optional[str] = None) -> None:
        self.invariant = invariant
        self.detail = detail
        self.message = f"{invariant.name}: {invariant.value}" + (f" ({detail})" if detail else "")
        super().__init__(self.message)

    def __str__(self) -> str:
        return self.message
