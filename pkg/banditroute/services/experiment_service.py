import dataclasses
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Union

import numpy as np

from banditroute.data.enums import Algorithm
from banditroute.exceptions.aggregation_error import AggregationError
from banditroute.exceptions.experiment_error import ExperimentError
from banditroute.learners import kernels
from banditroute.learners.episodic_learner import EpisodicLearner
from banditroute.learners.regret_diagnostics import RegretDiagnostics
from banditroute.learners.rtdp_learner import RTDPLearner
from banditroute.learners.value_iteration_ucb_learner import ValueIterationUCBLearner
from banditroute.models.aggregate_result import AggregateResult
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.experiment_config import ExperimentConfig
from banditroute.models.learner_state import LearnerState
from banditroute.models.optimal_solution import OptimalSolution
from banditroute.models.run_result import RunResult
from banditroute.models.sample_stream import SampleStream
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.services.oracle_service import OracleService


class ExperimentService:
    """
    The experiment harness: runs independent learning runs of a configured algorithm on a graph, measures each
    episode's regret against the oracle, and aggregates the recorded series across runs.

    Every run owns its own learner state and sample stream, seeded by `derive_seed(base_seed, run_index)`, so runs can
    execute in any order or concurrently and still produce identical results. With `workers > 1` runs share the
    interpreter, which can inflate the measured wall-clock; use `workers=1` when timings are compared.
    """

    @staticmethod
    def derive_seed(base_seed: int, run_index: int) -> int:
        """
        The seed of a run's sample stream: the first 64-bit word generated by
        `numpy.random.SeedSequence([base_seed, run_index])`.

        Args:
            base_seed (int): The experiment's base seed.
            run_index (int): The zero-based run index.

        Returns:
            int: An unsigned 64-bit seed.
        """
        return int(np.random.SeedSequence([base_seed, run_index]).generate_state(1, np.uint64)[0])

    @staticmethod
    def make_learner(config: ExperimentConfig, graph: StochasticGraph) -> EpisodicLearner:
        """
        Build the learner selected by an experiment configuration.

        Args:
            config (ExperimentConfig): The experiment settings.
            graph (StochasticGraph): The graph to learn on.

        Returns:
            EpisodicLearner: A learner bound to `graph`.
        """
        l_max = config.l_max_for(graph)
        if config.algorithm == Algorithm.VALUE_ITERATION_UCB:
            return ValueIterationUCBLearner(graph=graph, params=config.ucb_params, theta=config.theta, l_max=l_max)
        return RTDPLearner(
            graph=graph,
            algorithm=config.algorithm,
            params=config.ucb_params,
            epsilon=config.epsilon,
            update_rule=config.update_rule,
            l_max=l_max,
        )

    @staticmethod
    def episode_regret(trace: EpisodeTrace, graph: StochasticGraph, oracle: OptimalSolution) -> float:
        """
        The regret of one episode: the true expected cost of the traversed walk minus the optimal cost. Truncated walks
        are charged for the edges they traversed.

        Args:
            trace (EpisodeTrace): The episode's walk.
            graph (StochasticGraph): The graph that was explored.
            oracle (OptimalSolution): The ground truth for `graph`.

        Returns:
            float: The episode's regret in time units.
        """
        return OracleService.path_cost(graph, trace.edges) - oracle.optimal_cost

    @staticmethod
    def policy_agreement(
        learner: EpisodicLearner, state: LearnerState, graph: StochasticGraph, oracle: OptimalSolution
    ) -> float:
        """
        The fraction of non-destination nodes reachable from the origin whose greedy action is optimal, i.e. satisfies
        mu(e) + V*(s') <= V*(s) within 1e-9.

        Args:
            learner (EpisodicLearner): The learner whose greedy rule is evaluated.
            state (LearnerState): The learned statistics.
            graph (StochasticGraph): The explored graph.
            oracle (OptimalSolution): The ground truth for `graph`.

        Returns:
            float: A value in [0, 1].
        """
        nodes = sorted(node for node in graph.reachable if node != graph.destination)
        optimal = 0
        for node in nodes:
            edge_index = learner.greedy_action(state, node)
            target = graph.edges[edge_index].target
            if graph.mean(edge_index) + oracle.values[target] <= oracle.values[node] + 1e-9:
                optimal += 1
        return optimal / len(nodes)

    @staticmethod
    def regret_envelope(
        num_edges: int, num_relevant_states: int, l_max: int, episodes: Union[int, np.ndarray]
    ) -> Union[float, np.ndarray]:
        """
        The growth shape sqrt(|E| T log T) + sqrt(|S| T log T L_max) that the cumulative regret of an optimistic
        learner is expected to stay proportional to. Constants are omitted, so only the shape is meaningful.

        Args:
            num_edges (int): |E|.
            num_relevant_states (int): Number of states an episode can visit.
            l_max (int): The step cap per episode.
            episodes (Union[int, np.ndarray]): T, or an array of episode counts.

        Returns:
            Union[float, np.ndarray]: The envelope evaluated at `episodes`.
        """
        t = np.asarray(episodes, dtype=np.float64)
        t_log_t = t * np.log(t)
        envelope = np.sqrt(num_edges * t_log_t) + np.sqrt(num_relevant_states * t_log_t * l_max)
        return float(envelope) if envelope.ndim == 0 else envelope

    @classmethod
    def run_single(
        cls,
        config: ExperimentConfig,
        graph: StochasticGraph,
        oracle: OptimalSolution,
        run_index: int,
        seed: Optional[int] = None,
    ) -> RunResult:
        """
        Execute one run of `config.episodes` episodes. Only the time spent inside the learner's episodes is counted as
        wall-clock; regret bookkeeping and diagnostics are excluded.

        Args:
            config (ExperimentConfig): The experiment settings.
            graph (StochasticGraph): The graph to learn on, with the start state already applied.
            oracle (OptimalSolution): The ground truth for `graph`.
            run_index (int): The zero-based run index.
            seed (Optional[int]): Overrides the derived seed.

        Returns:
            RunResult: Every series recorded during the run.

        Raises:
            ExperimentError: Wrapping any learner failure with the run and episode indices.
        """
        seed = cls.derive_seed(config.base_seed, run_index) if seed is None else seed
        episodes = config.episodes
        params = config.ucb_params

        try:
            learner = cls.make_learner(config, graph)
        except Exception as error:
            raise ExperimentError(run=run_index, episode=None, cause=error) from error

        stream = SampleStream(seed)
        state = learner.initial_state()
        kernels.warmup()

        regret = np.zeros(episodes)
        v_origin = np.zeros(episodes)
        steps = np.zeros(episodes, dtype=np.int64)
        truncated = np.zeros(episodes, dtype=np.bool_)
        price_of_optimism = np.full(episodes, np.nan)
        bellman_error = np.full(episodes, np.nan)
        backups = np.zeros(episodes, dtype=np.int64)
        elapsed = 0.0

        for episode in range(episodes):
            before = state.copy()
            try:
                start = time.perf_counter()
                trace, state = learner.run_episode(state, stream)
                elapsed += time.perf_counter() - start
            except Exception as error:
                raise ExperimentError(run=run_index, episode=episode + 1, cause=error) from error

            regret[episode] = cls.episode_regret(trace, graph, oracle)
            v_origin[episode] = state.V[graph.origin]
            steps[episode] = trace.steps
            truncated[episode] = trace.truncated
            backups[episode] = trace.backups
            if not trace.truncated:
                price_of_optimism[episode], bellman_error[episode] = RegretDiagnostics.decompose(
                    trace, before, graph, oracle, params
                )

        cumulative = np.cumsum(regret)
        result = RunResult(
            run_index=run_index,
            seed=seed,
            per_episode_regret=regret,
            cumulative_regret=cumulative,
            average_regret=cumulative / np.arange(1, episodes + 1),
            v_origin_series=v_origin,
            steps=steps,
            truncated=truncated,
            price_of_optimism=price_of_optimism,
            bellman_error=bellman_error,
            backups=backups,
            edge_sample_counts=state.n.copy(),
            wall_clock_seconds=elapsed,
            truncation_count=int(np.count_nonzero(truncated)),
            policy_agreement=cls.policy_agreement(learner, state, graph, oracle),
        )
        logging.debug(
            f"ExperimentService run {run_index} finished: {config.algorithm.value}, "
            f"average regret {result.final_average_regret:.6f}, {elapsed:.4f}s"
        )
        return result

    @classmethod
    def run_experiment(
        cls, config: ExperimentConfig, graph: StochasticGraph, oracle: Optional[OptimalSolution] = None
    ) -> list[RunResult]:
        """
        Execute `config.runs` independent runs, serially or on a thread pool, and return them ordered by run index.

        Args:
            config (ExperimentConfig): The experiment settings.
            graph (StochasticGraph): The validated graph.
            oracle (Optional[OptimalSolution]): The ground truth; solved here when omitted or when `config.origin`
                moves the start state.

        Returns:
            list[RunResult]: One result per run.

        Raises:
            ExperimentError: If any run fails.
        """
        if config.origin is not None and config.origin != graph.origin:
            graph = dataclasses.replace(graph, origin=config.origin)
            oracle = None
        if oracle is None:
            oracle = OracleService.solve_exact(graph)

        logging.debug(
            f"ExperimentService starting {config.runs} runs x {config.episodes} episodes of {config.algorithm.value} "
            f"on {graph} with {config.workers} worker(s)"
        )
        kernels.warmup()

        if config.workers == 1:
            return [cls.run_single(config, graph, oracle, run_index) for run_index in range(config.runs)]

        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            futures = [
                executor.submit(cls.run_single, config, graph, oracle, run_index) for run_index in range(config.runs)
            ]
            return [future.result() for future in futures]

    @staticmethod
    def _nan_mean(curves: np.ndarray) -> np.ndarray:
        """
        Column means ignoring `nan` entries; columns without any finite entry stay `nan`.
        """
        valid = ~np.isnan(curves)
        counts = valid.sum(axis=0)
        sums = np.where(valid, curves, 0.0).sum(axis=0)
        means = np.full(curves.shape[1], np.nan)
        np.divide(sums, counts, out=means, where=counts > 0)
        return means

    @classmethod
    def aggregate(cls, results: list[RunResult]) -> AggregateResult:
        """
        Combine runs into arithmetic means and population standard deviations.

        Args:
            results (list[RunResult]): The runs of one experiment.

        Returns:
            AggregateResult: The cross-run statistics.

        Raises:
            AggregationError: If `results` is empty or the runs differ in episode or edge count.
        """
        if not results:
            raise AggregationError("cannot aggregate an empty list of runs")

        episodes = results[0].episodes
        edges = len(results[0].edge_sample_counts)
        for result in results:
            if result.episodes != episodes or len(result.edge_sample_counts) != edges:
                raise AggregationError(
                    f"run {result.run_index} has {result.episodes} episodes and {len(result.edge_sample_counts)} "
                    f"edges, expected {episodes} and {edges}"
                )

        average_regret = np.vstack([result.average_regret for result in results])
        v_origin = np.vstack([result.v_origin_series for result in results])
        final_average_regret = average_regret[:, -1]
        final_v_origin = v_origin[:, -1]
        wall_clock = np.array([result.wall_clock_seconds for result in results])

        return AggregateResult(
            runs=len(results),
            episodes=episodes,
            mean_final_average_regret=float(np.mean(final_average_regret)),
            std_final_average_regret=float(np.std(final_average_regret)),
            mean_final_v_origin=float(np.mean(final_v_origin)),
            std_final_v_origin=float(np.std(final_v_origin)),
            mean_wall_clock_seconds=float(np.mean(wall_clock)),
            std_wall_clock_seconds=float(np.std(wall_clock)),
            mean_regret=np.mean([result.per_episode_regret for result in results], axis=0),
            mean_cumulative_regret=np.mean([result.cumulative_regret for result in results], axis=0),
            mean_average_regret=np.mean(average_regret, axis=0),
            std_average_regret=np.std(average_regret, axis=0),
            mean_v_origin=np.mean(v_origin, axis=0),
            std_v_origin=np.std(v_origin, axis=0),
            mean_price_of_optimism=cls._nan_mean(np.vstack([result.price_of_optimism for result in results])),
            mean_bellman_error=cls._nan_mean(np.vstack([result.bellman_error for result in results])),
            edge_sample_counts=np.sum([result.edge_sample_counts for result in results], axis=0),
            mean_policy_agreement=float(np.mean([result.policy_agreement for result in results])),
        )
