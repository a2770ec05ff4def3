from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class OptimalSolution:
    """
    Ground-truth optimal values of a graph, computed from the true expected edge costs.

    Attributes:
        values (np.ndarray): V*(s) for every node; `inf` for nodes that cannot reach the destination.
        optimal_path (list[int]): Node sequence of the expected-shortest path from origin to destination.
        optimal_edges (list[int]): Edge indices along `optimal_path`.
        optimal_cost (float): The expected cost of `optimal_path`, equal to `values[origin]`.
        unique (bool): Whether `optimal_path` is the only origin-destination path achieving `optimal_cost`.
    """

    values: np.ndarray
    optimal_path: list[int]
    optimal_edges: list[int]
    optimal_cost: float
    unique: bool

    def format_path(self) -> str:
        return " -> ".join(str(node) for node in self.optimal_path)
