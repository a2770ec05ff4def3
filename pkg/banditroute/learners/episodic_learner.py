from abc import ABC, abstractmethod

from banditroute.data.enums import Algorithm
from banditroute.learners.kernels import _jit_select_action
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.learner_state import LearnerState
from banditroute.models.sample_stream import SampleStream
from banditroute.models.stochastic_graph import StochasticGraph


class EpisodicLearner(ABC):
    """
    EpisodicLearner is an abstract base class for the learners compared by the experiment harness. A learner is bound
    to one graph and one step cap; all mutable statistics live in a `LearnerState` that the caller owns and passes in,
    so a single learner may serve several runs as long as every run uses its own state and sample stream.
    """

    def __init__(self, graph: StochasticGraph, l_max: int) -> None:
        """
        Initialize the learner.

        Args:
            graph (StochasticGraph): The validated graph to learn on.
            l_max (int): The maximum number of steps per episode.
        """
        if l_max < 1:
            raise ValueError(f"l_max must be at least 1, got {l_max}")
        self._graph = graph
        self._l_max = l_max

    @property
    @abstractmethod
    def algorithm(self) -> Algorithm:
        """
        The algorithm identifier of the learner.
        """

    @abstractmethod
    def run_episode(self, state: LearnerState, stream: SampleStream) -> tuple[EpisodeTrace, LearnerState]:
        """
        Run one episode from the origin, mutating `state` in place.

        Args:
            state (LearnerState): The run's statistics.
            stream (SampleStream): The run's source of randomness.

        Returns:
            tuple[EpisodeTrace, LearnerState]: The walk taken and the (same, updated) state.
        """

    @property
    def graph(self) -> StochasticGraph:
        return self._graph

    @property
    def l_max(self) -> int:
        return self._l_max

    def initial_state(self) -> LearnerState:
        return LearnerState.initial(self._graph)

    def greedy_action(self, state: LearnerState, node: int) -> int:
        """
        The outgoing edge of `node` minimizing Q(s, a) = c_hat(s, a) + V(s'), smallest edge index on ties; -1 if the
        node has no outgoing edges.
        """
        return int(
            _jit_select_action(
                self._graph.offsets,
                self._graph.edge_order,
                self._graph.targets,
                state.c_hat,
                state.n,
                state.V,
                int(node),
                state.N[node],
                0.0,
                False,
                0.0,
            )
        )

    def greedy_policy(self, state: LearnerState) -> dict[int, int]:
        """
        The greedy action at every node that has outgoing edges, except the destination.

        Args:
            state (LearnerState): The statistics to act on.

        Returns:
            dict[int, int]: Mapping from node to edge index.
        """
        return {
            node: self.greedy_action(state, node)
            for node in range(self._graph.nodes)
            if node != self._graph.destination and self._graph.out_edges(node)
        }
