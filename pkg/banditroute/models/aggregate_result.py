from dataclasses import dataclass

import numpy as np


@dataclass(eq=False)
class AggregateResult:
    """
    Statistics across the runs of one experiment: arithmetic means and population standard deviations, taken
    element-wise over runs for the curves.

    Attributes:
        runs (int): Number of aggregated runs.
        episodes (int): Length of every per-episode curve.
        mean_final_average_regret (float): Mean of the final average regret.
        std_final_average_regret (float): Standard deviation of the final average regret.
        mean_final_v_origin (float): Mean of the final V(origin).
        std_final_v_origin (float): Standard deviation of the final V(origin).
        mean_wall_clock_seconds (float): Mean run time.
        std_wall_clock_seconds (float): Standard deviation of the run time.
        mean_regret (np.ndarray): Per-episode mean regret.
        mean_cumulative_regret (np.ndarray): Per-episode mean cumulative regret.
        mean_average_regret (np.ndarray): Per-episode mean average regret.
        std_average_regret (np.ndarray): Per-episode standard deviation of the average regret.
        mean_v_origin (np.ndarray): Per-episode mean V(origin).
        std_v_origin (np.ndarray): Per-episode standard deviation of V(origin).
        mean_price_of_optimism (np.ndarray): Per-episode mean over non-truncated episodes (`nan` if none).
        mean_bellman_error (np.ndarray): Per-episode mean over non-truncated episodes (`nan` if none).
        edge_sample_counts (np.ndarray): Per-edge visit counts summed over runs.
        mean_policy_agreement (float): Mean final policy agreement.
    """

    runs: int
    episodes: int
    mean_final_average_regret: float
    std_final_average_regret: float
    mean_final_v_origin: float
    std_final_v_origin: float
    mean_wall_clock_seconds: float
    std_wall_clock_seconds: float
    mean_regret: np.ndarray
    mean_cumulative_regret: np.ndarray
    mean_average_regret: np.ndarray
    std_average_regret: np.ndarray
    mean_v_origin: np.ndarray
    std_v_origin: np.ndarray
    mean_price_of_optimism: np.ndarray
    mean_bellman_error: np.ndarray
    edge_sample_counts: np.ndarray
    mean_policy_agreement: float
