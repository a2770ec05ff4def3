from dataclasses import dataclass
from typing import Optional

from banditroute import config
from banditroute.data.enums import Algorithm, UpdateRule
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Everything needed to reproduce an experiment on a given graph.

    Attributes:
        algorithm (Algorithm): The learner to run.
        runs (int): Number of independent runs.
        episodes (int): Number of episodes per run.
        theta (float): Convergence threshold of the synchronous value-iteration sweeps.
        exploration_coefficient (float): The UCB constant `c`.
        epsilon (float): Exploration probability of the epsilon-greedy learner.
        l_max (Optional[int]): Step cap per episode; defaults to `config.L_MAX_FACTOR * |V|`.
        base_seed (int): Seed from which every run's seed is derived.
        update_rule (UpdateRule): How RTDP learners update V(s) after an observation.
        unvisited_priority (bool): Whether unvisited edges get the `MAX_RADIUS` exploration bonus.
        workers (int): Number of runs executed concurrently; 1 is the serial timing mode.
        origin (Optional[int]): Alternate start state; defaults to the graph's origin.
    """

    algorithm: Algorithm = Algorithm.RTDP_UCB
    runs: int = config.DEFAULT_RUNS
    episodes: int = config.DEFAULT_EPISODES
    theta: float = config.DEFAULT_THETA
    exploration_coefficient: float = config.DEFAULT_EXPLORATION_COEFFICIENT
    epsilon: float = config.DEFAULT_EPSILON
    l_max: Optional[int] = None
    base_seed: int = config.SEED
    update_rule: UpdateRule = UpdateRule.FULL_MIN
    unvisited_priority: bool = True
    workers: int = 1
    origin: Optional[int] = None

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError(f"runs must be at least 1, got {self.runs}")
        if self.episodes < 1:
            raise ValueError(f"episodes must be at least 1, got {self.episodes}")
        if not self.theta > 0:
            raise ValueError(f"theta must be positive, got {self.theta}")
        if self.exploration_coefficient < 0:
            raise ValueError(f"exploration_coefficient must be non-negative, got {self.exploration_coefficient}")
        if not 0 <= self.epsilon <= 1:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if self.l_max is not None and self.l_max < 1:
            raise ValueError(f"l_max must be at least 1, got {self.l_max}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")

    @property
    def ucb_params(self) -> UcbParams:
        return UcbParams(
            exploration_coefficient=self.exploration_coefficient, unvisited_priority=self.unvisited_priority
        )

    def l_max_for(self, graph: StochasticGraph) -> int:
        """
        The effective step cap on a graph.

        Args:
            graph (StochasticGraph): The graph being explored.

        Returns:
            int: `l_max` if set, otherwise `config.L_MAX_FACTOR * graph.nodes`.
        """
        return self.l_max if self.l_max is not None else config.L_MAX_FACTOR * graph.nodes
