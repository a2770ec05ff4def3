from banditroute import config
from banditroute.exceptions.dead_end_error import DeadEndError
from banditroute.learners.kernels import _jit_confidence_radius, _jit_select_action
from banditroute.models.edge import Edge
from banditroute.models.learner_state import LearnerState
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams


class UCB:
    """
    The optimistic action-selection rule for shortest-path learning. Costs are minimized, so optimism subtracts the
    confidence radius from the Bellman estimate of each action:

        Q(s, a) = c_hat(s, a) + V(s')
        rad(e)  = sqrt(c * log N(s) / n(e))
        U(s, a) = Q(s, a) - rad(e)

    and the action with the smallest U is taken. Edges that were never sampled (or states never visited) get the
    finite sentinel radius `config.MAX_RADIUS`, which places them ahead of every visited edge.
    """

    @staticmethod
    def compute_q(state: LearnerState, edge: Edge) -> float:
        """
        The Bellman estimate of taking `edge`: its empirical mean cost plus the value estimate of its target.

        Args:
            state (LearnerState): The learner's statistics.
            edge (Edge): The candidate action.

        Returns:
            float: Q(s, a).
        """
        return float(state.c_hat[edge.edge_index] + state.V[edge.target])

    @staticmethod
    def confidence_radius(params: UcbParams, visits_state: int, visits_edge: int) -> float:
        """
        The exploration bonus of an edge.

        Args:
            params (UcbParams): The exploration coefficient and the unvisited-edge policy.
            visits_state (int): N(s), the number of visits to the edge's source.
            visits_edge (int): n(e), the number of times the edge was taken.

        Returns:
            float: sqrt(c * log N(s) / n(e)), or the unvisited sentinel if either count is zero.
        """
        return float(
            _jit_confidence_radius(
                float(params.exploration_coefficient),
                int(visits_state),
                int(visits_edge),
                bool(params.unvisited_priority),
                config.MAX_RADIUS,
            )
        )

    @classmethod
    def compute_u(cls, state: LearnerState, params: UcbParams, edge: Edge) -> float:
        """
        The optimistic cost estimate U(s, a) = Q(s, a) - rad(e); may be negative.

        Args:
            state (LearnerState): The learner's statistics.
            params (UcbParams): The exploration parameters.
            edge (Edge): The candidate action.

        Returns:
            float: U(s, a).
        """
        radius = cls.confidence_radius(params, state.N[edge.source], state.n[edge.edge_index])
        return cls.compute_q(state, edge) - radius

    @staticmethod
    def select_action(state: LearnerState, params: UcbParams, graph: StochasticGraph, node: int) -> int:
        """
        Choose the outgoing edge of `node` with the smallest U. Ties are broken by the smallest edge index, and when
        unvisited priority is on the first unvisited edge is chosen before any visited one.

        Args:
            state (LearnerState): The learner's statistics.
            params (UcbParams): The exploration parameters.
            graph (StochasticGraph): The graph being explored.
            node (int): The current state.

        Returns:
            int: The index of the chosen edge.

        Raises:
            DeadEndError: If `node` has no outgoing edges.
        """
        edge_index = _jit_select_action(
            graph.offsets,
            graph.edge_order,
            graph.targets,
            state.c_hat,
            state.n,
            state.V,
            int(node),
            state.N[node],
            float(params.exploration_coefficient),
            bool(params.unvisited_priority),
            config.MAX_RADIUS,
        )
        if edge_index < 0:
            raise DeadEndError(node=node)
        return int(edge_index)
