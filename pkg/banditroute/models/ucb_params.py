from dataclasses import dataclass

from banditroute import config


@dataclass(frozen=True)
class UcbParams:
    """
    Parameters of the optimistic action-selection rule.

    Attributes:
        exploration_coefficient (float): The constant `c` in the confidence radius sqrt(c * log N(s) / n(e)).
        unvisited_priority (bool): If True, unvisited edges receive `config.MAX_RADIUS` and are always tried first;
            if False, they receive no bonus at all.
    """

    exploration_coefficient: float = config.DEFAULT_EXPLORATION_COEFFICIENT
    unvisited_priority: bool = True

    def __post_init__(self) -> None:
        if self.exploration_coefficient < 0:
            raise ValueError(f"exploration_coefficient must be non-negative, got {self.exploration_coefficient}")
