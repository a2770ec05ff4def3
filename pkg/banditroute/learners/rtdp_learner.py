import logging
from typing import Optional

from banditroute import config
from banditroute.data.enums import Algorithm, UpdateRule
from banditroute.exceptions.dead_end_error import DeadEndError
from banditroute.learners.episodic_learner import EpisodicLearner
from banditroute.learners.kernels import _jit_record_and_backup
from banditroute.learners.ucb import UCB
from banditroute.models.edge import Edge
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.learner_state import LearnerState
from banditroute.models.sample_stream import SampleStream
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams


class RTDPLearner(EpisodicLearner):
    """
    Real-time dynamic programming on a stochastic road network. Values are only updated at the states an episode
    actually visits; the three variants differ in how the next edge is chosen:

    - `RTDP_UCB`: the optimistic rule of `UCB.select_action`.
    - `RTDP_STANDARD`: greedy argmin of Q(s, a), smallest edge index on ties.
    - `RTDP_EPSILON_GREEDY`: with probability epsilon a uniformly random outgoing edge, otherwise greedy. Both the coin
      flip and the random edge are drawn from the run's sample stream.

    After every observation the edge statistics are updated and V(s) is recomputed with the configured update rule.
    """

    variants = (Algorithm.RTDP_UCB, Algorithm.RTDP_STANDARD, Algorithm.RTDP_EPSILON_GREEDY)

    def __init__(
        self,
        graph: StochasticGraph,
        algorithm: Algorithm = Algorithm.RTDP_UCB,
        params: Optional[UcbParams] = None,
        epsilon: float = config.DEFAULT_EPSILON,
        update_rule: UpdateRule = UpdateRule.FULL_MIN,
        l_max: Optional[int] = None,
    ) -> None:
        """
        Initialize the learner.

        Args:
            graph (StochasticGraph): The validated graph to learn on.
            algorithm (Algorithm): One of `RTDPLearner.variants`.
            params (Optional[UcbParams]): Exploration parameters of the UCB variant.
            epsilon (float): Exploration probability of the epsilon-greedy variant.
            update_rule (UpdateRule): How V(s) is updated after each observation.
            l_max (Optional[int]): Step cap; defaults to `config.L_MAX_FACTOR * |V|`.
        """
        if algorithm not in self.variants:
            raise ValueError(f"RTDPLearner does not implement `{algorithm.value}`")
        if not 0 <= epsilon <= 1:
            raise ValueError(f"epsilon must lie in [0, 1], got {epsilon}")

        super().__init__(graph=graph, l_max=config.L_MAX_FACTOR * graph.nodes if l_max is None else l_max)
        self._algorithm = algorithm
        self._params = UcbParams() if params is None else params
        self._epsilon = epsilon
        self._update_rule = update_rule
        logging.debug(f"RTDPLearner initialized: {algorithm.value}, {update_rule.value}, l_max={self.l_max}")

    @property
    def algorithm(self) -> Algorithm:
        return self._algorithm

    @property
    def params(self) -> UcbParams:
        return self._params

    @staticmethod
    def observe_and_update(
        state: LearnerState,
        edge: Edge,
        sampled_cost: float,
        graph: StochasticGraph,
        update_rule: UpdateRule = UpdateRule.FULL_MIN,
    ) -> tuple[LearnerState, int]:
        """
        Fold a sampled cost into the edge statistics, then update the value of the edge's source.

        With `FULL_MIN`, V(s) becomes the minimum of Q(s, a) over every outgoing action, which may raise it as cost
        estimates grow. With `MONOTONE`, V(s) becomes min(V(s), Q(s, a)) for the action taken only. The destination's
        value is never modified.

        Args:
            state (LearnerState): The statistics to update in place.
            edge (Edge): The traversed edge.
            sampled_cost (float): The observed, non-negative cost.
            graph (StochasticGraph): The graph being explored.
            update_rule (UpdateRule): The value update rule.

        Returns:
            tuple[LearnerState, int]: The updated state and the number of Q(s, a) evaluations performed.
        """
        backups = _jit_record_and_backup(
            graph.offsets,
            graph.edge_order,
            graph.targets,
            state.n,
            state.cost_sum,
            state.c_hat,
            state.V,
            edge.edge_index,
            edge.source,
            float(sampled_cost),
            graph.destination,
            update_rule == UpdateRule.FULL_MIN,
        )
        return state, int(backups)

    def _choose(self, state: LearnerState, node: int, stream: SampleStream) -> int:
        """
        Pick the next edge according to the variant.
        """
        if self._algorithm == Algorithm.RTDP_UCB:
            return UCB.select_action(state, self._params, self._graph, node)

        if self._algorithm == Algorithm.RTDP_EPSILON_GREEDY and stream.uniform() < self._epsilon:
            out = self._graph.out_edges(node)
            return out[stream.choice(len(out))]

        edge_index = self.greedy_action(state, node)
        if edge_index < 0:
            raise DeadEndError(node=node)
        return edge_index

    def run_episode(self, state: LearnerState, stream: SampleStream) -> tuple[EpisodeTrace, LearnerState]:
        """
        Walk from the origin until the destination is reached or `l_max` steps were taken. At every state the visit
        count N(s) is incremented on arrival, an edge is chosen, its cost is sampled and the statistics are updated.

        Args:
            state (LearnerState): The run's statistics, updated in place.
            stream (SampleStream): The run's source of randomness.

        Returns:
            tuple[EpisodeTrace, LearnerState]: The walk taken and the updated state.

        Raises:
            DeadEndError: If a non-destination node without outgoing edges is reached.
        """
        graph = self._graph
        trace = EpisodeTrace()
        node = graph.origin

        while node != graph.destination:
            if trace.steps >= self._l_max:
                trace.truncated = True
                break

            out = graph.out_edges(node)
            if not out:
                raise DeadEndError(node=node)

            state.N[node] += 1
            edge_index = self._choose(state, node, stream)
            trace.backups += len(out)

            edge = graph.edges[edge_index]
            cost = graph.sample_cost(edge_index, stream)
            _, backups = self.observe_and_update(state, edge, cost, graph, self._update_rule)
            trace.backups += backups
            trace.append(edge_index, cost)
            node = edge.target

        return trace, state
