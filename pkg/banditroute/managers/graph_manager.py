import json
import logging
import math
from pathlib import Path
from typing import Union

import networkx as nx
import numpy as np

from banditroute import config, paths
from banditroute.exceptions.generation_error import GenerationError
from banditroute.exceptions.graph_format_error import GraphFormatError
from banditroute.exceptions.graph_validation_error import GraphValidationError
from banditroute.managers.resource_manager import ResourceManager
from banditroute.models.cost_distribution import CostDistribution
from banditroute.models.edge import Edge
from banditroute.models.stochastic_graph import StochasticGraph


class GraphManager:
    """
    Management utility for reading, writing and generating road networks. Graph documents are UTF-8 JSON records with
    the fields `nodes`, `origin`, `destination` and `edges`, where every edge is `{source, target, dist}` and `dist` is
    either `{kind: "gaussian", mean, variance}` or `{kind: "deterministic", value}`; times are in seconds.
    """

    @classmethod
    def load_graph(cls, document: str) -> StochasticGraph:
        """
        Parse and validate a graph document.

        Args:
            document (str): The JSON text of the document.

        Returns:
            StochasticGraph: The validated graph.

        Raises:
            GraphFormatError: If the document is not valid JSON or does not follow the graph schema.
            GraphValidationError: If the graph violates one of its invariants.
        """
        try:
            data = json.loads(document)
        except json.JSONDecodeError as e:
            raise GraphFormatError(f"line {e.lineno}, column {e.colno}", f"invalid JSON: {e.msg}")

        graph = StochasticGraph.from_dict(data)
        logging.debug(f"GraphManager loaded {graph}")
        return graph

    @classmethod
    def load(cls, source: Union[str, Path]) -> StochasticGraph:
        """
        Load a graph from a file path, or from a packaged example when `source` starts with `example:`.

        Args:
            source (Union[str, Path]): A path, or a name such as `example:example_network_22`.

        Returns:
            StochasticGraph: The validated graph.
        """
        if isinstance(source, str) and source.startswith(paths.example_prefix):
            return cls.load_example(source[len(paths.example_prefix) :])

        with open(source, "r", encoding=config.ENCODING) as fs:
            return cls.load_graph(fs.read())

    @classmethod
    def load_example(cls, name: str) -> StochasticGraph:
        """
        Load one of the networks shipped in `banditroute/resources/`.

        Args:
            name (str): The resource name, with or without the `.json` suffix.

        Returns:
            StochasticGraph: The validated graph.
        """
        filename = name if name.endswith(paths.graph_extension) else name + paths.graph_extension
        return cls.load_graph(ResourceManager.load_raw(filename=filename))

    @classmethod
    def list_examples(cls) -> list[str]:
        """
        List the names of the packaged example networks.

        Returns:
            list[str]: Names usable with `load_example`.
        """
        return [name[: -len(paths.graph_extension)] for name in ResourceManager.list(suffix=paths.graph_extension)]

    @classmethod
    def dump_graph(cls, graph: StochasticGraph) -> str:
        """
        Serialize a graph into a graph document. Output is byte-stable for equal graphs.

        Args:
            graph (StochasticGraph): The graph to serialize.

        Returns:
            str: Indented JSON text terminated by a newline.
        """
        return json.dumps(graph.to_dict(), indent=2) + "\n"

    @classmethod
    def save(cls, graph: StochasticGraph, path: Union[str, Path]) -> None:
        """
        Write a graph document to disk.

        Args:
            graph (StochasticGraph): The graph to write.
            path (Union[str, Path]): The destination file.
        """
        with open(path, "w", encoding=config.ENCODING, newline="\n") as fs:
            fs.write(cls.dump_graph(graph))
        logging.debug(f"GraphManager saved {graph} to `{path}`")

    @classmethod
    def generate_network(
        cls,
        nodes: int,
        connectivity: float = 3.0,
        mean_range: tuple[float, float] = (5.0, 30.0),
        variance: float = 2.0,
        seed: int = config.SEED,
    ) -> StochasticGraph:
        """
        Generate a random road network. Intersections are scattered uniformly in the unit square with the origin (node
        0) and the destination (node `nodes - 1`) pinned to opposite corners; every other node connects to its nearest
        neighbours, and each segment's mean travel time grows linearly with its length across `mean_range`. Nodes that
        are reachable from the origin but cannot reach the destination are repaired by linking them to the nearest node
        that can. The result is fully determined by the arguments.

        Args:
            nodes (int): Number of intersections, at least 2.
            connectivity (float): Average out-degree of non-destination nodes, at least 1.
            mean_range (tuple[float, float]): Positive bounds for the mean travel times.
            variance (float): The variance shared by every edge's Gaussian cost.
            seed (int): Seed for the layout and degree draws.

        Returns:
            StochasticGraph: A validated graph.

        Raises:
            ValueError: If the arguments are out of range.
            GenerationError: If the network is still invalid after `config.GENERATION_ATTEMPTS` repair passes.
        """
        low, high = (float(bound) for bound in mean_range)
        if nodes < 2:
            raise ValueError(f"nodes must be at least 2, got {nodes}")
        if connectivity < 1:
            raise ValueError(f"connectivity must be at least 1, got {connectivity}")
        if not 0 < low <= high:
            raise ValueError(f"mean_range must satisfy 0 < low <= high, got {mean_range}")
        if variance < 0:
            raise ValueError(f"variance must be non-negative, got {variance}")

        rng = np.random.default_rng(seed)
        origin, destination = 0, nodes - 1

        positions = rng.uniform(0.0, 1.0, size=(nodes, 2))
        positions[origin] = (0.0, 0.0)
        positions[destination] = (1.0, 1.0)
        distances = np.linalg.norm(positions[:, None, :] - positions[None, :, :], axis=-1)

        base_degree = int(math.floor(connectivity))
        fraction = connectivity - base_degree
        links: list[tuple[int, int]] = []
        for source in range(nodes):
            if source == destination:
                continue
            degree = base_degree + int(rng.random() < fraction)
            degree = min(max(degree, 1), nodes - 1)
            neighbours = [int(n) for n in np.argsort(distances[source], kind="stable") if n != source]
            links.extend((source, target) for target in neighbours[:degree])

        for attempt in range(1, config.GENERATION_ATTEMPTS + 1):
            digraph = nx.DiGraph(links)
            digraph.add_nodes_from(range(nodes))
            reachable = nx.descendants(digraph, origin) | {origin}
            reaches = nx.ancestors(digraph, destination) | {destination}
            stranded = sorted(reachable - reaches)
            if not stranded:
                break

            logging.debug(f"GraphManager repair pass {attempt}: {len(stranded)} stranded nodes")
            anchors = sorted(reaches)
            for source in stranded:
                target = min(anchors, key=lambda node: (distances[source, node], node))
                if (source, target) not in digraph.edges:
                    links.append((source, target))
        else:
            raise GenerationError(attempts=config.GENERATION_ATTEMPTS)

        scale = (high - low) / math.sqrt(2.0)
        edges = tuple(
            Edge(
                source=source,
                target=target,
                distribution=CostDistribution.gaussian(
                    mean=round(low + scale * float(distances[source, target]), 3), variance=variance
                ),
                edge_index=edge_index,
            )
            for edge_index, (source, target) in enumerate(links)
        )

        try:
            graph = StochasticGraph(nodes=nodes, edges=edges, origin=origin, destination=destination)
        except GraphValidationError as e:
            raise GenerationError(attempts=config.GENERATION_ATTEMPTS, message=f"generated network is invalid: {e}")

        logging.debug(f"GraphManager generated {graph} with seed {seed}")
        return graph
