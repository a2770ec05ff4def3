from dataclasses import dataclass, field


@dataclass
class EpisodeTrace:
    """
    The walk taken by a learner during one episode.

    Attributes:
        edges (list[int]): Traversed edge indices, in order, starting at the origin.
        sampled_costs (list[float]): The cost sampled on each traversed edge.
        truncated (bool): True if the step cap was reached before the destination.
        backups (int): Number of Q(s, a) evaluations performed during the episode.
        sweeps (int): Number of synchronous value-iteration sweeps performed before the rollout.
    """

    edges: list[int] = field(default_factory=list)
    sampled_costs: list[float] = field(default_factory=list)
    truncated: bool = False
    backups: int = 0
    sweeps: int = 0

    @property
    def steps(self) -> int:
        return len(self.edges)

    def append(self, edge_index: int, cost: float) -> None:
        self.edges.append(edge_index)
        self.sampled_costs.append(cost)
