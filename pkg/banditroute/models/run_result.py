from dataclasses import dataclass

import numpy as np


@dataclass(eq=False)
class RunResult:
    """
    Everything recorded during one run of an experiment. Per-episode series are aligned: entry `k` describes episode
    `k + 1` and is recorded at the end of that episode.

    Attributes:
        run_index (int): Zero-based index of the run within its experiment.
        seed (int): The seed of the run's sample stream.
        per_episode_regret (np.ndarray): Expected cost of the traversed walk minus the optimal cost.
        cumulative_regret (np.ndarray): Prefix sums of `per_episode_regret`.
        average_regret (np.ndarray): `cumulative_regret[k] / (k + 1)`.
        v_origin_series (np.ndarray): V(origin) at the end of every episode.
        steps (np.ndarray): Steps taken in every episode.
        truncated (np.ndarray): Whether every episode hit the step cap.
        price_of_optimism (np.ndarray): Sum of pre-episode confidence radii along the walk (`nan` if truncated).
        bellman_error (np.ndarray): Sum of pre-episode V(s) - V*(s) along the walk (`nan` if truncated).
        backups (np.ndarray): Q(s, a) evaluations performed in every episode.
        edge_sample_counts (np.ndarray): Final per-edge visit counts n(e).
        wall_clock_seconds (float): Time spent inside the learner's episodes.
        truncation_count (int): Number of truncated episodes.
        policy_agreement (float): Fraction of nodes reachable from the origin whose final greedy action is optimal.
    """

    run_index: int
    seed: int
    per_episode_regret: np.ndarray
    cumulative_regret: np.ndarray
    average_regret: np.ndarray
    v_origin_series: np.ndarray
    steps: np.ndarray
    truncated: np.ndarray
    price_of_optimism: np.ndarray
    bellman_error: np.ndarray
    backups: np.ndarray
    edge_sample_counts: np.ndarray
    wall_clock_seconds: float
    truncation_count: int
    policy_agreement: float

    @property
    def episodes(self) -> int:
        return len(self.per_episode_regret)

    @property
    def final_average_regret(self) -> float:
        return float(self.average_regret[-1])

    @property
    def final_v_origin(self) -> float:
        return float(self.v_origin_series[-1])
