import heapq
import logging

import networkx as nx
import numpy as np

from banditroute import config
from banditroute.exceptions.oracle_error import OracleError
from banditroute.exceptions.path_overflow_error import PathOverflowError
from banditroute.models.optimal_solution import OptimalSolution
from banditroute.models.stochastic_graph import StochasticGraph


class OracleService:
    """
    Ground truth for a stochastic road network. Transitions are deterministic and expected edge costs are
    non-negative, so the optimal expected cost-to-go V*(s) is a shortest-path distance to the destination under the
    edge means and can be computed exactly by label-setting search. A brute-force path enumerator is provided to
    verify the solver independently.

    Path costs are accumulated from the destination backwards, V(s) = mu(e) + V(s'), in both the solver and the
    enumerator, so both report bit-identical costs for the same path.
    """

    @staticmethod
    def path_cost(graph: StochasticGraph, edges: list[int]) -> float:
        """
        The expected cost of a walk, accumulated from its last edge backwards.

        Args:
            graph (StochasticGraph): The graph the walk lives in.
            edges (list[int]): The traversed edge indices.

        Returns:
            float: The sum of the edge means.
        """
        cost = 0.0
        for edge_index in reversed(edges):
            cost = graph.mean(edge_index) + cost
        return cost

    @classmethod
    def solve_exact(cls, graph: StochasticGraph) -> OptimalSolution:
        """
        Compute V*(s) for every node and the expected-shortest origin-destination path. Among equally good actions the
        one with the smallest edge index is taken at every step, unless it only leads back into the path through
        zero-cost edges.

        Args:
            graph (StochasticGraph): A validated graph.

        Returns:
            OptimalSolution: The optimal values, path and cost.

        Raises:
            OracleError: If the origin cannot reach the destination (impossible for validated graphs).
        """
        values = np.full(graph.nodes, np.inf)
        incoming = [[] for _ in range(graph.nodes)]
        for edge in graph.edges:
            if edge.source != graph.destination:
                incoming[edge.target].append(edge.edge_index)

        values[graph.destination] = 0.0
        settled = np.zeros(graph.nodes, dtype=np.bool_)
        queue = [(0.0, graph.destination)]
        while queue:
            value, node = heapq.heappop(queue)
            if settled[node]:
                continue
            settled[node] = True

            for edge_index in incoming[node]:
                source = graph.edges[edge_index].source
                if settled[source]:
                    continue
                candidate = graph.mean(edge_index) + value
                if candidate < values[source]:
                    values[source] = candidate
                    heapq.heappush(queue, (candidate, source))

        if not np.isfinite(values[graph.origin]):
            raise OracleError(f"destination {graph.destination} is unreachable from origin {graph.origin}")

        path, edges = cls._first_optimal_path(graph, values)

        solution = OptimalSolution(
            values=values,
            optimal_path=path,
            optimal_edges=edges,
            optimal_cost=float(values[graph.origin]),
            unique=cls._count_optimal_paths(graph, values, limit=2) == 1,
        )
        logging.debug(f"OracleService solved {graph}: V*={solution.optimal_cost}, path {solution.format_path()}")
        return solution

    @staticmethod
    def _first_optimal_path(graph: StochasticGraph, values: np.ndarray) -> tuple[list[int], list[int]]:
        """
        Walk tight edges (mu(e) + V*(s') = V*(s)) depth-first from the origin, trying the edges of every node in
        edge-index order and never revisiting a node. Without zero-cost ties this takes the smallest-index optimal
        action at every step; zero-cost cycles are skipped instead of followed.
        """
        tight = nx.DiGraph()
        tight.add_nodes_from(range(graph.nodes))
        for edge in graph.edges:
            if edge.source == graph.destination or not np.isfinite(values[edge.source]):
                continue
            if graph.mean(edge.edge_index) + values[edge.target] == values[edge.source]:
                if not tight.has_edge(edge.source, edge.target):
                    tight.add_edge(edge.source, edge.target, edge_index=edge.edge_index)

        predecessors = nx.dfs_predecessors(tight, source=graph.origin)
        path = [graph.destination]
        while path[-1] != graph.origin:
            path.append(predecessors[path[-1]])
        path.reverse()
        edges = [tight.edges[source, target]["edge_index"] for source, target in zip(path, path[1:])]
        return path, edges

    @staticmethod
    def _count_optimal_paths(graph: StochasticGraph, values: np.ndarray, limit: int) -> int:
        """
        Count origin-destination paths made only of tight edges (mu(e) + V*(s') = V*(s) within 1e-9), stopping once
        `limit` is reached. A cycle of tight edges counts as unlimited.
        """
        tolerance = 1e-9
        memo: dict[int, int] = {}
        on_stack: set[int] = set()

        def count(node: int) -> int:
            if node == graph.destination:
                return 1
            if node in memo:
                return memo[node]
            if node in on_stack:
                return limit
            on_stack.add(node)
            total = 0
            for edge_index in graph.out_edges(node):
                target = graph.edges[edge_index].target
                if abs(graph.mean(edge_index) + values[target] - values[node]) <= tolerance:
                    total = min(limit, total + count(target))
                    if total >= limit:
                        break
            on_stack.discard(node)
            memo[node] = total
            return total

        return count(graph.origin)

    @classmethod
    def enumerate_paths(
        cls, graph: StochasticGraph, max_paths: int = config.MAX_ENUMERATED_PATHS
    ) -> list[tuple[list[int], float]]:
        """
        List every simple origin-destination path with its exact expected cost.

        Args:
            graph (StochasticGraph): The graph to enumerate.
            max_paths (int): The largest number of paths to produce.

        Returns:
            list[tuple[list[int], float]]: `(node sequence, expected cost)` pairs sorted by cost, then by node sequence.

        Raises:
            PathOverflowError: If the graph has more than `max_paths` simple paths.
        """
        multigraph = graph.to_networkx()
        paths = []
        for edge_path in nx.all_simple_edge_paths(multigraph, graph.origin, graph.destination):
            if len(paths) >= max_paths:
                raise PathOverflowError(max_paths=max_paths)
            edges = [key for _, _, key in edge_path]
            nodes = [graph.origin] + [target for _, target, _ in edge_path]
            paths.append((nodes, cls.path_cost(graph, edges)))

        paths.sort(key=lambda item: (item[1], item[0]))
        return paths
