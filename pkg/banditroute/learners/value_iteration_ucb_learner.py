import logging
from typing import Optional

import numpy as np

from banditroute import config
from banditroute.data.enums import Algorithm
from banditroute.exceptions.convergence_error import ConvergenceError
from banditroute.exceptions.dead_end_error import DeadEndError
from banditroute.learners.episodic_learner import EpisodicLearner
from banditroute.learners.kernels import _jit_optimistic_costs, _jit_select_action, _jit_value_iteration
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.learner_state import LearnerState
from banditroute.models.sample_stream import SampleStream
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams


class ValueIterationUCBLearner(EpisodicLearner):
    """
    Value iteration with an exploration bonus. Before every rollout the learner recomputes V over all states that can
    reach the destination by synchronous sweeps on optimistic costs max(0, c_hat(s, a) - rad(e)), starting from zero
    and stopping once the largest change of a sweep falls below `theta`. The rollout then acts greedily on those
    converged values while sampling costs and updating the edge statistics and visit counts.
    """

    def __init__(
        self,
        graph: StochasticGraph,
        params: Optional[UcbParams] = None,
        theta: float = config.DEFAULT_THETA,
        l_max: Optional[int] = None,
        max_sweeps: int = config.VI_MAX_SWEEPS,
    ) -> None:
        """
        Initialize the learner.

        Args:
            graph (StochasticGraph): The validated graph to learn on.
            params (Optional[UcbParams]): Exploration parameters for the optimistic costs.
            theta (float): Convergence threshold of the sweeps.
            l_max (Optional[int]): Step cap; defaults to `config.L_MAX_FACTOR * |V|`.
            max_sweeps (int): Sweep cap after which `ConvergenceError` is raised.
        """
        if not theta > 0:
            raise ValueError(f"theta must be positive, got {theta}")

        super().__init__(graph=graph, l_max=config.L_MAX_FACTOR * graph.nodes if l_max is None else l_max)
        self._params = UcbParams() if params is None else params
        self._theta = theta
        self._max_sweeps = max_sweeps

        # Q(s, a) evaluations per sweep: every edge between two nodes that can reach the destination.
        reach = graph.reaches_destination
        active = reach[graph.sources] & reach[graph.targets] & (graph.sources != graph.destination)
        self._backups_per_sweep = int(np.count_nonzero(active))
        logging.debug(f"ValueIterationUCBLearner initialized: theta={theta}, l_max={self.l_max}")

    @property
    def algorithm(self) -> Algorithm:
        return Algorithm.VALUE_ITERATION_UCB

    @property
    def params(self) -> UcbParams:
        return self._params

    def optimistic_costs(self, state: LearnerState) -> np.ndarray:
        """
        Per-edge optimistic costs max(0, c_hat(s, a) - rad(e)) under the current counts.

        Args:
            state (LearnerState): The learner's statistics.

        Returns:
            np.ndarray: One cost per edge.
        """
        return _jit_optimistic_costs(
            self._graph.sources,
            state.c_hat,
            state.n,
            state.N,
            float(self._params.exploration_coefficient),
            bool(self._params.unvisited_priority),
            config.MAX_RADIUS,
        )

    def solve(self, costs: np.ndarray) -> tuple[np.ndarray, int]:
        """
        Run synchronous value iteration on a set of edge costs.

        Args:
            costs (np.ndarray): Per-edge costs.

        Returns:
            tuple[np.ndarray, int]: The converged values and the number of sweeps.

        Raises:
            ConvergenceError: If the residual is still above `theta` after `max_sweeps` sweeps.
        """
        graph = self._graph
        values, sweeps, residual = _jit_value_iteration(
            graph.offsets,
            graph.edge_order,
            graph.targets,
            costs,
            graph.reaches_destination,
            graph.destination,
            self._theta,
            self._max_sweeps,
        )
        if residual >= self._theta:
            raise ConvergenceError(sweeps=int(sweeps), residual=float(residual))
        return values, int(sweeps)

    def run_episode(self, state: LearnerState, stream: SampleStream) -> tuple[EpisodeTrace, LearnerState]:
        """
        Recompute optimistic values, then roll out greedily from the origin until the destination or `l_max` steps.

        Args:
            state (LearnerState): The run's statistics, updated in place; `V` is replaced by the converged values.
            stream (SampleStream): The run's source of randomness.

        Returns:
            tuple[EpisodeTrace, LearnerState]: The walk taken and the updated state.

        Raises:
            ConvergenceError: If value iteration does not converge.
            DeadEndError: If a non-destination node without outgoing edges is reached.
        """
        graph = self._graph
        costs = self.optimistic_costs(state)
        values, sweeps = self.solve(costs)
        state.V[:] = values

        trace = EpisodeTrace(sweeps=sweeps, backups=sweeps * self._backups_per_sweep)
        node = graph.origin
        while node != graph.destination:
            if trace.steps >= self._l_max:
                trace.truncated = True
                break

            state.N[node] += 1
            edge_index = int(
                _jit_select_action(
                    graph.offsets,
                    graph.edge_order,
                    graph.targets,
                    costs,
                    state.n,
                    state.V,
                    int(node),
                    state.N[node],
                    0.0,
                    False,
                    0.0,
                )
            )
            if edge_index < 0:
                raise DeadEndError(node=node)
            trace.backups += len(graph.out_edges(node))

            cost = graph.sample_cost(edge_index, stream)
            state.record(edge_index, cost)
            trace.append(edge_index, cost)
            node = graph.edges[edge_index].target

        return trace, state
