from dataclasses import dataclass

from banditroute.models.cost_distribution import CostDistribution


@dataclass(frozen=True)
class Edge:
    """
    A directed road segment between two intersections.

    Attributes:
        source (int): The node the edge leaves.
        target (int): The node the edge enters.
        distribution (CostDistribution): The travel-time distribution of the segment.
        edge_index (int): Dense, unique position of the edge in its graph's edge list.
    """

    source: int
    target: int
    distribution: CostDistribution
    edge_index: int

    @property
    def mean(self) -> float:
        """
        The true expected cost of traversing the edge.
        """
        return self.distribution.expected

    def __str__(self) -> str:
        return f"[{self.edge_index}] {self.source} -> {self.target} ~ {self.distribution}"
