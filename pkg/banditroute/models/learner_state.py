from dataclasses import dataclass

import numpy as np
from typing_extensions import Self

from banditroute.models.stochastic_graph import StochasticGraph


@dataclass
class LearnerState:
    """
    The mutable statistics a learner accumulates during one run. A state is owned by exactly one run and is never
    shared between threads.

    Attributes:
        V (np.ndarray): Per-node value estimates, initialized to 0; `V[destination]` stays 0.
        N (np.ndarray): Per-node visit counts, incremented on arrival at a node.
        n (np.ndarray): Per-edge visit counts.
        cost_sum (np.ndarray): Per-edge sum of sampled costs.
        c_hat (np.ndarray): Per-edge empirical mean cost, 0 for edges that were never sampled.
    """

    V: np.ndarray
    N: np.ndarray
    n: np.ndarray
    cost_sum: np.ndarray
    c_hat: np.ndarray

    @classmethod
    def initial(cls, graph: StochasticGraph) -> Self:
        """
        Create the all-zero state for a graph.

        Args:
            graph (StochasticGraph): The graph the learner will explore.

        Returns:
            LearnerState: A fresh state.
        """
        edges = len(graph.edges)
        return cls(
            V=np.zeros(graph.nodes, dtype=np.float64),
            N=np.zeros(graph.nodes, dtype=np.int64),
            n=np.zeros(edges, dtype=np.int64),
            cost_sum=np.zeros(edges, dtype=np.float64),
            c_hat=np.zeros(edges, dtype=np.float64),
        )

    def record(self, edge_index: int, cost: float) -> None:
        """
        Fold one sampled cost into an edge's running statistics.

        Args:
            edge_index (int): The traversed edge.
            cost (float): The sampled cost.
        """
        self.n[edge_index] += 1
        self.cost_sum[edge_index] += cost
        self.c_hat[edge_index] = self.cost_sum[edge_index] / self.n[edge_index]

    def copy(self) -> Self:
        """
        Return an independent snapshot of the state.
        """
        return self.__class__(
            V=self.V.copy(), N=self.N.copy(), n=self.n.copy(), cost_sum=self.cost_sum.copy(), c_hat=self.c_hat.copy()
        )
