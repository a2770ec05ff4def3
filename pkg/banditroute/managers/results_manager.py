import csv
import logging
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from banditroute import config, paths
from banditroute.data.enums import Algorithm
from banditroute.exceptions.results_format_error import ResultsFormatError
from banditroute.models.aggregate_result import AggregateResult
from banditroute.models.optimal_solution import OptimalSolution
from banditroute.models.run_result import RunResult
from banditroute.models.stochastic_graph import StochasticGraph


class ResultsManager:
    """
    Writes experiment results as CSV documents and exports sampled networks as DOT documents. Column names and their
    order are fixed; every float is written with `config.FLOAT_DECIMALS` decimals, and rows are newline-terminated.
    """

    episodes_columns = (
        "run",
        "episode",
        "regret",
        "cumulative_regret",
        "average_regret",
        "v_origin",
        "steps",
        "truncated",
        "price_of_optimism",
        "bellman_error",
    )
    edges_columns = ("run", "edge_index", "source", "target", "samples")
    summary_columns = (
        "algo",
        "runs",
        "episodes",
        "mean_final_avg_regret",
        "std_final_avg_regret",
        "mean_v_origin",
        "mean_wall_clock_s",
    )
    aggregate_columns = (
        "episode",
        "mean_regret",
        "mean_cumulative_regret",
        "mean_average_regret",
        "std_average_regret",
        "mean_v_origin",
        "std_v_origin",
    )

    @staticmethod
    def format_float(value: float) -> str:
        return f"{value:.{config.FLOAT_DECIMALS}f}"

    @staticmethod
    def _write(path: Union[str, Path], columns: tuple[str, ...], rows: Iterable[Iterable[str]]) -> Path:
        path = Path(path)
        with open(path, "w", encoding=config.ENCODING, newline="") as fs:
            writer = csv.writer(fs, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(rows)
        logging.debug(f"ResultsManager wrote `{path}`")
        return path

    @classmethod
    def write_episodes(cls, results: list[RunResult], path: Union[str, Path]) -> Path:
        """
        Write one row per run and episode; episodes are numbered from 1.

        Args:
            results (list[RunResult]): The runs to write.
            path (Union[str, Path]): The destination file.

        Returns:
            Path: The written file.
        """
        f = cls.format_float
        rows = (
            (
                str(result.run_index),
                str(episode + 1),
                f(result.per_episode_regret[episode]),
                f(result.cumulative_regret[episode]),
                f(result.average_regret[episode]),
                f(result.v_origin_series[episode]),
                str(result.steps[episode]),
                str(int(result.truncated[episode])),
                f(result.price_of_optimism[episode]),
                f(result.bellman_error[episode]),
            )
            for result in results
            for episode in range(result.episodes)
        )
        return cls._write(path, cls.episodes_columns, rows)

    @classmethod
    def write_edges(cls, results: list[RunResult], graph: StochasticGraph, path: Union[str, Path]) -> Path:
        """
        Write the final per-edge sample counts of every run.

        Args:
            results (list[RunResult]): The runs to write.
            graph (StochasticGraph): The graph the runs explored.
            path (Union[str, Path]): The destination file.

        Returns:
            Path: The written file.
        """
        rows = (
            (str(result.run_index), str(edge.edge_index), str(edge.source), str(edge.target), str(samples))
            for result in results
            for edge, samples in zip(graph.edges, result.edge_sample_counts)
        )
        return cls._write(path, cls.edges_columns, rows)

    @classmethod
    def write_summary(cls, summaries: list[tuple[Algorithm, AggregateResult]], path: Union[str, Path]) -> Path:
        """
        Write one row per algorithm.

        Args:
            summaries (list[tuple[Algorithm, AggregateResult]]): The aggregated experiments, in output order.
            path (Union[str, Path]): The destination file.

        Returns:
            Path: The written file.
        """
        f = cls.format_float
        rows = (
            (
                algorithm.value,
                str(aggregate.runs),
                str(aggregate.episodes),
                f(aggregate.mean_final_average_regret),
                f(aggregate.std_final_average_regret),
                f(aggregate.mean_final_v_origin),
                f(aggregate.mean_wall_clock_seconds),
            )
            for algorithm, aggregate in summaries
        )
        return cls._write(path, cls.summary_columns, rows)

    @classmethod
    def write_aggregate(cls, aggregate: AggregateResult, path: Union[str, Path]) -> Path:
        """
        Write the cross-run mean curves, one row per episode.

        Args:
            aggregate (AggregateResult): The aggregated experiment.
            path (Union[str, Path]): The destination file.

        Returns:
            Path: The written file.
        """
        f = cls.format_float
        rows = (
            (
                str(episode + 1),
                f(aggregate.mean_regret[episode]),
                f(aggregate.mean_cumulative_regret[episode]),
                f(aggregate.mean_average_regret[episode]),
                f(aggregate.std_average_regret[episode]),
                f(aggregate.mean_v_origin[episode]),
                f(aggregate.std_v_origin[episode]),
            )
            for episode in range(aggregate.episodes)
        )
        return cls._write(path, cls.aggregate_columns, rows)

    @classmethod
    def write_run(
        cls, results: list[RunResult], aggregate: AggregateResult, graph: StochasticGraph, out_dir: Union[str, Path]
    ) -> list[Path]:
        """
        Write the episode, edge and aggregate files of one experiment into a directory.

        Args:
            results (list[RunResult]): The runs of the experiment.
            aggregate (AggregateResult): Their aggregate.
            graph (StochasticGraph): The explored graph.
            out_dir (Union[str, Path]): The output directory; created if missing.

        Returns:
            list[Path]: The written files.
        """
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        return [
            cls.write_episodes(results, out_dir / paths.episodes_csv),
            cls.write_edges(results, graph, out_dir / paths.edges_csv),
            cls.write_aggregate(aggregate, out_dir / paths.aggregate_csv),
        ]

    @classmethod
    def read_edge_samples(cls, path: Union[str, Path], graph: StochasticGraph) -> np.ndarray:
        """
        Read an edges file and sum its sample counts over runs.

        Args:
            path (Union[str, Path]): An edges file written by `write_edges`.
            graph (StochasticGraph): The graph the file must describe.

        Returns:
            np.ndarray: Per-edge sample counts.

        Raises:
            ResultsFormatError: If the header is wrong, a row is malformed, or an edge does not exist in `graph`.
        """
        samples = np.zeros(len(graph.edges), dtype=np.int64)
        with open(path, "r", encoding=config.ENCODING, newline="") as fs:
            reader = csv.reader(fs)
            header = next(reader, None)
            if header is None or tuple(header) != cls.edges_columns:
                raise ResultsFormatError(f"{path}:1", f"expected the header {','.join(cls.edges_columns)}")

            for row in reader:
                location = f"{path}:{reader.line_num}"
                try:
                    _, edge_index, source, target, count = (int(value) for value in row)
                except ValueError:
                    raise ResultsFormatError(location, "expected five integer columns")

                if not 0 <= edge_index < len(graph.edges):
                    raise ResultsFormatError(location, f"edge {edge_index} does not exist in the graph")
                edge = graph.edges[edge_index]
                if (edge.source, edge.target) != (source, target):
                    raise ResultsFormatError(
                        location, f"edge {edge_index} is {edge.source} -> {edge.target} in the graph"
                    )
                if count < 0:
                    raise ResultsFormatError(location, "sample counts must be non-negative")
                samples[edge_index] += count

        return samples

    @staticmethod
    def penwidth(samples: int, max_samples: int) -> float:
        """
        Linear pen width in [`config.PENWIDTH_MIN`, `config.PENWIDTH_MAX`]; every edge gets the minimum when nothing
        was sampled.
        """
        if max_samples <= 0:
            return config.PENWIDTH_MIN
        return config.PENWIDTH_MIN + (config.PENWIDTH_MAX - config.PENWIDTH_MIN) * samples / max_samples

    @classmethod
    def dump_dot(
        cls, graph: StochasticGraph, samples: np.ndarray, optimal: Optional[OptimalSolution] = None
    ) -> str:
        """
        Describe a network in the DOT language, drawing every edge with a pen width proportional to its sample count.

        Args:
            graph (StochasticGraph): The network.
            samples (np.ndarray): Per-edge sample counts.
            optimal (Optional[OptimalSolution]): If given, the edges of the optimal path are coloured.

        Returns:
            str: The DOT document.
        """
        max_samples = int(np.max(samples)) if len(samples) else 0
        highlighted = set(optimal.optimal_edges) if optimal is not None else set()

        lines = ["digraph banditroute {", "  rankdir=LR;"]
        for node in range(graph.nodes):
            shape = "doublecircle" if node in (graph.origin, graph.destination) else "circle"
            lines.append(f'  {node} [label="{node}", shape={shape}];')
        for edge in graph.edges:
            attributes = [
                f'label="{edge.mean:g}"',
                f"penwidth={cls.penwidth(int(samples[edge.edge_index]), max_samples):.3f}",
                f"samples={int(samples[edge.edge_index])}",
            ]
            if edge.edge_index in highlighted:
                attributes.append('color="red"')
            lines.append(f"  {edge.source} -> {edge.target} [{', '.join(attributes)}];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def save_dot(
        cls,
        graph: StochasticGraph,
        samples: np.ndarray,
        path: Union[str, Path],
        optimal: Optional[OptimalSolution] = None,
    ) -> Path:
        """
        Write `dump_dot` output to disk.
        """
        path = Path(path)
        with open(path, "w", encoding=config.ENCODING, newline="\n") as fs:
            fs.write(cls.dump_dot(graph, samples, optimal))
        logging.debug(f"ResultsManager exported `{path}`")
        return path
