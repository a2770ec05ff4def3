import argparse
import logging
import sys
import textwrap
from pathlib import Path
from typing import Optional

from banditroute import config, paths
from banditroute.data.enums import Algorithm, UpdateRule
from banditroute.exceptions import (
    AggregationError,
    ConvergenceError,
    DeadEndError,
    ExperimentError,
    GenerationError,
    GraphFormatError,
    GraphValidationError,
    OracleError,
    PathOverflowError,
    ResultsFormatError,
)
from banditroute.managers.graph_manager import GraphManager
from banditroute.managers.results_manager import ResultsManager
from banditroute.models.experiment_config import ExperimentConfig
from banditroute.services.experiment_service import ExperimentService
from banditroute.services.oracle_service import OracleService

# Errors reported as a message on stderr with exit code 1.
handled_errors = (
    AggregationError,
    ConvergenceError,
    DeadEndError,
    ExperimentError,
    GenerationError,
    GraphFormatError,
    GraphValidationError,
    OracleError,
    PathOverflowError,
    ResultsFormatError,
    OSError,
    ValueError,
)


class CustomHelpFormatter(argparse.HelpFormatter):
    def _fill_text(self, text, width, indent):
        text = textwrap.dedent(text)
        text = textwrap.indent(text, indent)
        text = text.splitlines()
        text = [textwrap.fill(line, width) for line in text]
        text = "\n".join(text)
        return text


def at_least(minimum: int):
    def parse(value: str) -> int:
        number = int(value)
        if number < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {number}")
        return number

    return parse


def float_at_least(minimum: float):
    def parse(value: str) -> float:
        number = float(value)
        if not number >= minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return number

    return parse


def positive_float(value: str) -> float:
    number = float(value)
    if not number > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return number


def probability(value: str) -> float:
    number = float(value)
    if not 0 <= number <= 1:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {value}")
    return number


def init_parser(parser) -> None:
    parser.add_argument(
        "--debug",
        action="store_true",
        dest="debug",
        help="Enable debug mode, which will echo the progress of every run to the terminal.",
    )


def init_subparser_generate(subparser) -> None:
    subparser.add_argument("--nodes", type=at_least(2), required=True, help="Number of intersections, at least 2.")
    subparser.add_argument(
        "--connectivity", type=float_at_least(1.0), default=3.0, help="Average out-degree, at least 1."
    )
    subparser.add_argument(
        "--mean-min", type=positive_float, default=5.0, dest="mean_min", help="Smallest mean travel time."
    )
    subparser.add_argument(
        "--mean-max", type=positive_float, default=30.0, dest="mean_max", help="Largest mean travel time."
    )
    subparser.add_argument(
        "--variance", type=float_at_least(0.0), default=2.0, help="Variance of every edge's travel time."
    )
    subparser.add_argument("--seed", type=int, default=config.SEED, help="Seed of the network layout.")
    subparser.add_argument("--out", type=Path, help="Output file; the document is printed when omitted.")


def init_subparser_oracle(subparser) -> None:
    subparser.add_argument("--graph", required=True, help="Graph document path, or `example:<name>`.")
    subparser.add_argument("--full", action="store_true", help="Also print V* for every node.")


def init_experiment_flags(subparser) -> None:
    subparser.add_argument("--graph", required=True, help="Graph document path, or `example:<name>`.")
    subparser.add_argument("--runs", type=at_least(1), default=config.DEFAULT_RUNS, help="Independent runs.")
    subparser.add_argument("--episodes", type=at_least(1), default=config.DEFAULT_EPISODES, help="Episodes per run.")
    subparser.add_argument("--seed", type=int, default=config.SEED, help="Base seed of every run.")
    subparser.add_argument("--out-dir", type=Path, required=True, dest="out_dir", help="Directory for the CSV files.")
    subparser.add_argument(
        "--theta", type=positive_float, default=config.DEFAULT_THETA, help="Value-iteration threshold."
    )
    subparser.add_argument(
        "--c",
        type=float_at_least(0.0),
        default=config.DEFAULT_EXPLORATION_COEFFICIENT,
        dest="exploration_coefficient",
        help="UCB exploration coefficient.",
    )
    subparser.add_argument("--epsilon", type=probability, default=config.DEFAULT_EPSILON, help="Epsilon-greedy rate.")
    subparser.add_argument("--l-max", type=at_least(1), dest="l_max", help="Step cap per episode.")
    subparser.add_argument(
        "--update-rule",
        choices=[rule.value for rule in UpdateRule],
        default=UpdateRule.FULL_MIN.value,
        dest="update_rule",
        help="How RTDP learners update V(s) after an observation.",
    )
    subparser.add_argument(
        "--workers",
        type=at_least(1),
        default=1,
        help="Runs executed concurrently; keep 1 when comparing wall-clock times.",
    )
    subparser.add_argument("--origin", type=int, help="Alternate start state.")


def init_subparser_run(subparser) -> None:
    subparser.add_argument(
        "--algo",
        choices=[algorithm.value for algorithm in Algorithm],
        required=True,
        help="The learner to run.",
    )
    init_experiment_flags(subparser)


def init_subparser_export_dot(subparser) -> None:
    subparser.add_argument("--graph", required=True, help="Graph document path, or `example:<name>`.")
    subparser.add_argument("--edges", type=Path, required=True, help="An edges.csv written by `run`.")
    subparser.add_argument("--out", type=Path, required=True, help="Output DOT file.")
    subparser.add_argument(
        "--highlight-optimal",
        action="store_true",
        dest="highlight_optimal",
        help="Colour the edges of the optimal path.",
    )


def experiment_config(args, algorithm: Algorithm) -> ExperimentConfig:
    return ExperimentConfig(
        algorithm=algorithm,
        runs=args.runs,
        episodes=args.episodes,
        theta=args.theta,
        exploration_coefficient=args.exploration_coefficient,
        epsilon=args.epsilon,
        l_max=args.l_max,
        base_seed=args.seed,
        update_rule=UpdateRule(args.update_rule),
        workers=args.workers,
        origin=args.origin,
    )


def exec_generate(args) -> None:
    graph = GraphManager.generate_network(
        nodes=args.nodes,
        connectivity=args.connectivity,
        mean_range=(args.mean_min, args.mean_max),
        variance=args.variance,
        seed=args.seed,
    )
    if args.out is None:
        sys.stdout.write(GraphManager.dump_graph(graph))
    else:
        GraphManager.save(graph, args.out)


def exec_oracle(args) -> None:
    graph = GraphManager.load(args.graph)
    solution = OracleService.solve_exact(graph)
    print(f"V*={ResultsManager.format_float(solution.optimal_cost)}, path: {solution.format_path()}")
    if args.full:
        for node, value in enumerate(solution.values):
            print(f"{node}: {ResultsManager.format_float(value)}")


def exec_run(args) -> list[Path]:
    graph = GraphManager.load(args.graph)
    config = experiment_config(args, Algorithm(args.algo))
    results = ExperimentService.run_experiment(config, graph)
    aggregate = ExperimentService.aggregate(results)

    envelope = ExperimentService.regret_envelope(
        len(graph.edges), len(graph.reachable), config.l_max_for(graph), config.episodes
    )
    logging.debug(
        f"ExperimentService mean cumulative regret {aggregate.mean_cumulative_regret[-1]:.6f}, "
        f"envelope shape {envelope:.6f}"
    )

    outputs = [args.out_dir / name for name in paths.run_outputs]
    try:
        ResultsManager.write_run(results, aggregate, graph, args.out_dir)
        ResultsManager.write_summary([(config.algorithm, aggregate)], args.out_dir / paths.summary_csv)
    except Exception:
        remove(outputs)
        raise
    return outputs


def exec_compare(args) -> list[Path]:
    graph = GraphManager.load(args.graph)
    summaries = []
    for algorithm in Algorithm:
        results = ExperimentService.run_experiment(experiment_config(args, algorithm), graph)
        summaries.append((algorithm, ExperimentService.aggregate(results)))

    args.out_dir.mkdir(parents=True, exist_ok=True)
    summary = args.out_dir / paths.summary_csv
    try:
        ResultsManager.write_summary(summaries, summary)
    except Exception:
        remove([summary])
        raise

    print(f"{'Algorithm':<22}{'Time (s)':>12}{'Est. V(origin)':>18}{'Avg. Regret':>14}")
    for algorithm, aggregate in summaries:
        print(
            f"{algorithm.label:<22}{aggregate.mean_wall_clock_seconds:>12.4f}"
            f"{aggregate.mean_final_v_origin:>18.2f}{aggregate.mean_final_average_regret:>14.2f}"
        )
    return [summary]


def exec_export_dot(args) -> None:
    graph = GraphManager.load(args.graph)
    samples = ResultsManager.read_edge_samples(args.edges, graph)
    optimal = OracleService.solve_exact(graph) if args.highlight_optimal else None
    ResultsManager.save_dot(graph, samples, args.out, optimal)


def remove(written: list[Path]) -> None:
    for path in written:
        path.unlink(missing_ok=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="banditroute",
        description=(
            "BanditRoute learns expected-shortest routes through road networks with stochastic travel times, and"
            " benchmarks RTDP with UCB exploration against greedy, epsilon-greedy and value-iteration learners."
        ),
        epilog=(
            f"Every command is deterministic for a given `--seed`. Use `--graph {paths.example_prefix}"
            f"{paths.example_network_22}` for the packaged 22-intersection network and `--graph"
            f" {paths.example_prefix}{paths.example_network_3}` for the three-node one."
        ),
        formatter_class=CustomHelpFormatter,
    )
    init_parser(parser)

    subparsers = parser.add_subparsers(required=True, dest="command")

    init_subparser_generate(
        subparsers.add_parser(
            "generate",
            description="Generate a random road network and write it as a graph document.",
            formatter_class=CustomHelpFormatter,
        )
    )
    init_subparser_oracle(
        subparsers.add_parser(
            "oracle",
            description="Print the optimal expected cost from the origin and the optimal path.",
            formatter_class=CustomHelpFormatter,
        )
    )
    init_subparser_run(
        subparsers.add_parser(
            "run",
            description=(
                "Run one learner for several independent runs and write episodes.csv, edges.csv, aggregate.csv and"
                " summary.csv."
            ),
            formatter_class=CustomHelpFormatter,
        )
    )
    init_experiment_flags(
        subparsers.add_parser(
            "compare",
            description=(
                "Run all four learners with the same graph and seed, write summary.csv and print a comparison of"
                " run time, estimated V(origin) and average regret."
            ),
            formatter_class=CustomHelpFormatter,
        )
    )
    init_subparser_export_dot(
        subparsers.add_parser(
            "export-dot",
            description="Export a network as DOT, with edge widths proportional to how often each edge was sampled.",
            formatter_class=CustomHelpFormatter,
        )
    )
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """
    Run the BanditRoute command line interface.

    Args:
        argv (Optional[list[str]]): The arguments, excluding the program name; defaults to `sys.argv[1:]`.

    Returns:
        int: 0 on success, 1 on a runtime or validation failure, 2 on a usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "generate" and args.mean_min > args.mean_max:
            parser.error(f"generate: --mean-min {args.mean_min} exceeds --mean-max {args.mean_max}")
    except SystemExit as e:
        return 0 if e.code is None else int(e.code)

    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    commands = {
        "generate": exec_generate,
        "oracle": exec_oracle,
        "run": exec_run,
        "compare": exec_compare,
        "export-dot": exec_export_dot,
    }
    try:
        commands[args.command](args)
    except handled_errors as e:
        print(f"banditroute {args.command}: {e}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    """
    Entry point of the `banditroute` console script.
    """
    sys.exit(main())


if __name__ == "__main__":
    run()
