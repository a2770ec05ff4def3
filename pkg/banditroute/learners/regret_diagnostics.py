from banditroute.learners.ucb import UCB
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.learner_state import LearnerState
from banditroute.models.optimal_solution import OptimalSolution
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams


class RegretDiagnostics:
    """
    Splits the per-episode learning error into the two terms of the usual optimism-based regret decomposition:

    - price of optimism: the confidence radii of the edges along the walk, sum over e in P_t of rad_t(e);
    - Bellman error: the value-estimate error at the states along the walk, sum over s in P_t of V_t(s) - V*(s).

    Both are evaluated with the statistics as they were before the episode started. The terms are reported for
    logging only; no claim is made that their sum bounds the regret of an individual episode.
    """

    @staticmethod
    def decompose(
        trace: EpisodeTrace,
        state_before: LearnerState,
        graph: StochasticGraph,
        oracle: OptimalSolution,
        params: UcbParams,
    ) -> tuple[float, float]:
        """
        Compute the decomposition terms of one completed episode. A state or edge visited several times during the
        episode contributes once per visit.

        Args:
            trace (EpisodeTrace): The episode's walk; must have reached the destination.
            state_before (LearnerState): A snapshot of the statistics taken before the episode.
            graph (StochasticGraph): The graph that was explored.
            oracle (OptimalSolution): The ground-truth values.
            params (UcbParams): The exploration parameters defining rad(e).

        Returns:
            tuple[float, float]: `(price_of_optimism, bellman_error)`.

        Raises:
            ValueError: If the episode was truncated.
        """
        if trace.truncated:
            raise ValueError("the regret decomposition is only defined for episodes that reached the destination")

        price_of_optimism = 0.0
        bellman_error = 0.0
        for edge_index in trace.edges:
            source = graph.edges[edge_index].source
            price_of_optimism += UCB.confidence_radius(params, state_before.N[source], state_before.n[edge_index])
            bellman_error += float(state_before.V[source] - oracle.values[source])

        return price_of_optimism, bellman_error
