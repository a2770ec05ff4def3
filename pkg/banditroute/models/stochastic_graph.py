from dataclasses import dataclass, field
from typing import Any

import networkx as nx
import numpy as np
from typing_extensions import Self

from banditroute.data.enums import DistributionKind, GraphInvariant
from banditroute.exceptions.graph_format_error import GraphFormatError
from banditroute.exceptions.graph_validation_error import GraphValidationError
from banditroute.models.cost_distribution import CostDistribution
from banditroute.models.edge import Edge
from banditroute.models.sample_stream import SampleStream


@dataclass(frozen=True)
class StochasticGraph:
    """
    A directed road network whose edges carry stochastic travel times, together with the origin and the absorbing
    destination of the routing task. Instances are validated on construction and immutable afterwards, so they can be
    shared freely between concurrent runs.

    Besides the edge list, the graph exposes a compressed adjacency layout consumed by the numba kernels of the
    learners: the outgoing edges of node `s` are `edge_order[offsets[s]:offsets[s + 1]]`, sorted by edge index.

    Attributes:
        nodes (int): The number of intersections; node ids are `0 .. nodes - 1`.
        edges (tuple[Edge, ...]): All road segments, ordered by edge index.
        origin (int): The start state of every episode.
        destination (int): The absorbing goal state.
    """

    nodes: int
    edges: tuple[Edge, ...]
    origin: int
    destination: int

    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    offsets: np.ndarray = field(init=False, repr=False, compare=False)
    edge_order: np.ndarray = field(init=False, repr=False, compare=False)
    sources: np.ndarray = field(init=False, repr=False, compare=False)
    targets: np.ndarray = field(init=False, repr=False, compare=False)
    means: np.ndarray = field(init=False, repr=False, compare=False)
    reachable: frozenset[int] = field(init=False, repr=False, compare=False)
    reaches_destination: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        self._validate_structure()

        adjacency = [[] for _ in range(self.nodes)]
        for edge in self.edges:
            adjacency[edge.source].append(edge.edge_index)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(out)) for out in adjacency))

        offsets = np.zeros(self.nodes + 1, dtype=np.int64)
        offsets[1:] = np.cumsum([len(out) for out in self.adjacency])
        edge_order = np.array([index for out in self.adjacency for index in out], dtype=np.int64)
        sources = np.array([edge.source for edge in self.edges], dtype=np.int64)
        targets = np.array([edge.target for edge in self.edges], dtype=np.int64)
        means = np.array([edge.mean for edge in self.edges], dtype=np.float64)

        # The destination is absorbing: its outgoing edges never influence which nodes an episode can visit.
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(self.nodes))
        digraph.add_edges_from((edge.source, edge.target) for edge in self.edges if edge.source != self.destination)
        reachable = frozenset(nx.descendants(digraph, self.origin) | {self.origin})
        ancestors = nx.ancestors(digraph, self.destination) | {self.destination}
        reaches_destination = np.zeros(self.nodes, dtype=np.bool_)
        reaches_destination[list(ancestors)] = True

        for array in (offsets, edge_order, sources, targets, means, reaches_destination):
            array.flags.writeable = False

        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "edge_order", edge_order)
        object.__setattr__(self, "sources", sources)
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "reachable", reachable)
        object.__setattr__(self, "reaches_destination", reaches_destination)

        stranded = sorted(node for node in reachable if not reaches_destination[node])
        if stranded:
            raise GraphValidationError(GraphInvariant.DESTINATION_REACHABLE, f"stranded nodes: {stranded}")

    def _validate_structure(self) -> None:
        """
        Check every invariant that does not require reachability analysis, in a fixed order, raising on the first
        violation.

        Raises:
            GraphValidationError: Naming the first violated invariant.
        """
        if self.nodes < 2:
            raise GraphValidationError(GraphInvariant.NODE_COUNT, f"nodes={self.nodes}")

        for name, node in (("origin", self.origin), ("destination", self.destination)):
            if not 0 <= node < self.nodes:
                raise GraphValidationError(GraphInvariant.NODE_RANGE, f"{name}={node}")

        if self.origin == self.destination:
            raise GraphValidationError(GraphInvariant.DISTINCT_ENDPOINTS, f"origin=destination={self.origin}")

        for position, edge in enumerate(self.edges):
            if edge.edge_index != position:
                raise GraphValidationError(
                    GraphInvariant.DENSE_EDGE_INDEX, f"edge at position {position} has index {edge.edge_index}"
                )
            if not (0 <= edge.source < self.nodes and 0 <= edge.target < self.nodes):
                raise GraphValidationError(GraphInvariant.NODE_RANGE, f"edge {edge}")
            if edge.source == edge.target:
                raise GraphValidationError(GraphInvariant.NO_SELF_LOOPS, f"edge {edge}")

            distribution = edge.distribution
            if distribution.kind == DistributionKind.GAUSSIAN:
                if distribution.mean <= 0:
                    raise GraphValidationError(GraphInvariant.POSITIVE_MEAN, f"edge {edge}")
                if distribution.variance < 0:
                    raise GraphValidationError(GraphInvariant.NONNEGATIVE_VARIANCE, f"edge {edge}")
            elif distribution.value < 0:
                raise GraphValidationError(GraphInvariant.NONNEGATIVE_VALUE, f"edge {edge}")

    def out_edges(self, node: int) -> tuple[int, ...]:
        """
        The indices of the edges leaving `node`, in ascending order.
        """
        return self.adjacency[node]

    def mean(self, edge_index: int) -> float:
        """
        The true expected cost of an edge.
        """
        return self.edges[edge_index].mean

    def sample_cost(self, edge_index: int, stream: SampleStream) -> float:
        """
        Draw one realization of an edge's travel time from a run's sample stream. Gaussian draws are clamped at zero.

        Args:
            edge_index (int): The edge to traverse.
            stream (SampleStream): The run's source of randomness; its state advances for stochastic edges.

        Returns:
            float: The sampled, non-negative cost.
        """
        return stream.cost(self.edges[edge_index].distribution)

    @property
    def max_out_degree(self) -> int:
        return max((len(out) for out in self.adjacency), default=0)

    def to_networkx(self) -> nx.MultiDiGraph:
        """
        Build a networkx view of the graph; each edge carries its `edge_index` and expected cost as `weight`.

        Returns:
            nx.MultiDiGraph: A multigraph, since documents may contain parallel edges.
        """
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.nodes))
        for edge in self.edges:
            graph.add_edge(edge.source, edge.target, key=edge.edge_index, edge_index=edge.edge_index, weight=edge.mean)
        return graph

    def to_dict(self) -> dict[str, Any]:
        """
        Convert the graph into a graph document with stable key order.

        Returns:
            dict[str, Any]: A record with `nodes`, `origin`, `destination` and `edges`.
        """
        return {
            "nodes": self.nodes,
            "origin": self.origin,
            "destination": self.destination,
            "edges": [
                {"source": edge.source, "target": edge.target, "dist": edge.distribution.to_dict()}
                for edge in self.edges
            ],
        }

    @classmethod
    def from_dict(cls, data: Any) -> Self:
        """
        Build and validate a graph from a decoded graph document.

        Args:
            data (Any): The decoded document.

        Returns:
            StochasticGraph: The validated graph.

        Raises:
            GraphFormatError: If a field is missing or has the wrong type.
            GraphValidationError: If the graph violates one of its invariants.
        """
        if not isinstance(data, dict):
            raise GraphFormatError("document", "expected a top-level record")

        for name in ("nodes", "origin", "destination"):
            if isinstance(data.get(name), bool) or not isinstance(data.get(name), int):
                raise GraphFormatError(name, "expected an integer")

        records = data.get("edges")
        if not isinstance(records, list):
            raise GraphFormatError("edges", "expected a list of edge records")

        edges = []
        for edge_index, record in enumerate(records):
            context = f"edges[{edge_index}]"
            if not isinstance(record, dict):
                raise GraphFormatError(context, "expected a record with `source`, `target` and `dist`")
            for name in ("source", "target"):
                if isinstance(record.get(name), bool) or not isinstance(record.get(name), int):
                    raise GraphFormatError(f"{context}.{name}", "expected an integer")
            distribution = CostDistribution.from_dict(record.get("dist"), context=f"{context}.dist")
            edges.append(Edge(record["source"], record["target"], distribution, edge_index))

        return cls(nodes=data["nodes"], edges=tuple(edges), origin=data["origin"], destination=data["destination"])

    def __str__(self) -> str:
        return (
            f"StochasticGraph(|V|={self.nodes}, |E|={len(self.edges)}, origin={self.origin}, "
            f"destination={self.destination})"
        )
