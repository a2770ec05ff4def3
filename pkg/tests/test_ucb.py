import itertools
import math
import unittest

import numpy as np

from banditroute import config
from banditroute.exceptions import DeadEndError
from banditroute.learners.ucb import UCB
from banditroute.models.cost_distribution import CostDistribution
from banditroute.models.edge import Edge
from banditroute.models.learner_state import LearnerState
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams


def fan_graph() -> StochasticGraph:
    """
    Three parallel edges from the origin to the destination.
    """
    edges = tuple(Edge(0, 1, CostDistribution.gaussian(1.0 + index, 2.0), index) for index in range(3))
    return StochasticGraph(nodes=2, edges=edges, origin=0, destination=1)


def star_graph(width: int, rng: np.random.Generator) -> StochasticGraph:
    """
    `width` edges from the origin into three intermediate nodes, each of which has one edge to the destination.
    """
    edges = [
        Edge(0, 1 + (index if index < 3 else int(rng.integers(3))), CostDistribution.gaussian(5.0, 2.0), index)
        for index in range(width)
    ]
    edges += [Edge(node, 4, CostDistribution.gaussian(5.0, 2.0), width + node - 1) for node in (1, 2, 3)]
    return StochasticGraph(nodes=5, edges=tuple(edges), origin=0, destination=4)


def random_star_state(graph: StochasticGraph, rng: np.random.Generator, allow_unvisited: bool) -> LearnerState:
    """
    Integer-valued statistics at the origin so that shifted Q values stay exact.
    """
    state = LearnerState.initial(graph)
    for index in graph.out_edges(0):
        cost = float(rng.integers(0, 20))
        for _ in range(int(rng.integers(0 if allow_unvisited else 1, 6))):
            state.record(index, cost)
    state.N[0] = max(1, int(state.n.sum()))
    state.V[1:4] = rng.integers(0, 30, size=3).astype(np.float64)
    return state


class TestConfidenceRadius(unittest.TestCase):

    def test_closed_form(self):
        for c, visits_state, visits_edge in itertools.product(
            (0.0, 0.5, 1.0, 2.0, 3.7), (1, 2, 5, 100, 12_345), (1, 2, 7, 50, 999)
        ):
            radius = UCB.confidence_radius(UcbParams(exploration_coefficient=c), visits_state, visits_edge)
            expected = math.sqrt(c * math.log(visits_state) / visits_edge)
            self.assertAlmostEqual(radius, expected, delta=1e-10)

    def test_unvisited(self):
        params = UcbParams()
        self.assertEqual(UCB.confidence_radius(params, 5, 0), config.MAX_RADIUS)
        self.assertEqual(UCB.confidence_radius(params, 0, 0), config.MAX_RADIUS)

        params = UcbParams(unvisited_priority=False)
        self.assertEqual(UCB.confidence_radius(params, 5, 0), 0.0)

    def test_single_visit_has_no_bonus(self):
        self.assertEqual(UCB.confidence_radius(UcbParams(), 1, 1), 0.0)

    def test_negative_coefficient(self):
        with self.assertRaises(ValueError):
            UcbParams(exploration_coefficient=-1.0)


class TestComputeU(unittest.TestCase):

    def test_u_is_q_minus_radius(self):
        graph = fan_graph()
        params = UcbParams()
        state = LearnerState.initial(graph)
        state.N[0] = 9
        for index, count in enumerate((1, 3, 0)):
            for _ in range(count):
                state.record(index, 2.5 + index)

        for edge in graph.edges:
            q = UCB.compute_q(state, edge)
            radius = UCB.confidence_radius(params, state.N[0], state.n[edge.edge_index])
            self.assertEqual(q, state.c_hat[edge.edge_index] + state.V[1])
            self.assertEqual(UCB.compute_u(state, params, edge), q - radius)


class TestSelectAction(unittest.TestCase):

    def reference(self, state, params, graph):
        if params.unvisited_priority:
            unvisited = [index for index in graph.out_edges(0) if state.n[index] == 0]
            if unvisited:
                return unvisited[0]
        return min(graph.out_edges(0), key=lambda index: (UCB.compute_u(state, params, graph.edges[index]), index))

    def test_exhaustive_fan(self):
        graph = fan_graph()
        for priority, visited, means in itertools.product(
            (True, False),
            itertools.product((False, True), repeat=3),
            itertools.product((1.0, 2.0), repeat=3),
        ):
            params = UcbParams(exploration_coefficient=2.0, unvisited_priority=priority)
            state = LearnerState.initial(graph)
            state.N[0] = 4
            for index in range(3):
                if visited[index]:
                    state.record(index, means[index])

            chosen = UCB.select_action(state, params, graph, 0)
            self.assertEqual(chosen, self.reference(state, params, graph), msg=f"{priority} {visited} {means}")

            if priority and not all(visited):
                self.assertEqual(chosen, visited.index(False))

    def test_ties_break_on_smallest_edge_index(self):
        graph = fan_graph()
        state = LearnerState.initial(graph)
        state.N[0] = 6
        for index in range(3):
            state.record(index, 5.0)
        self.assertEqual(UCB.select_action(state, UcbParams(), graph, 0), 0)

        state.record(0, 5.0)
        self.assertEqual(UCB.select_action(state, UcbParams(), graph, 0), 1)

    def test_unvisited_state_takes_first_edge(self):
        graph = fan_graph()
        state = LearnerState.initial(graph)
        for index in range(3):
            state.record(index, 5.0 - index)
        self.assertEqual(UCB.select_action(state, UcbParams(), graph, 0), 0)

    def test_dead_end(self):
        graph = fan_graph()
        state = LearnerState.initial(graph)
        with self.assertRaises(DeadEndError) as context:
            UCB.select_action(state, UcbParams(), graph, 1)
        self.assertEqual(context.exception.node, 1)


class TestSelectionProperties(unittest.TestCase):

    def test_constant_shift_keeps_the_choice(self):
        rng = np.random.default_rng(17)
        for trial in range(400):
            graph = star_graph(int(rng.integers(3, 9)), rng)
            state = random_star_state(graph, rng, allow_unvisited=trial % 2 == 0)
            shift = float(rng.integers(1, 100))
            out = list(graph.out_edges(0))

            for params in (
                UcbParams(),
                UcbParams(exploration_coefficient=float(rng.integers(0, 5)), unvisited_priority=False),
            ):
                chosen = UCB.select_action(state, params, graph, 0)

                shifted = state.copy()
                shifted.V[1:4] += shift
                self.assertEqual(UCB.select_action(shifted, params, graph, 0), chosen, msg=f"trial {trial}")

                shifted = state.copy()
                shifted.c_hat[out] += shift
                self.assertEqual(UCB.select_action(shifted, params, graph, 0), chosen, msg=f"trial {trial}")

    def test_no_bonus_and_no_priority_is_greedy(self):
        rng = np.random.default_rng(23)
        params = UcbParams(exploration_coefficient=0.0, unvisited_priority=False)
        for trial in range(300):
            graph = star_graph(int(rng.integers(3, 9)), rng)
            state = random_star_state(graph, rng, allow_unvisited=False)
            q = [UCB.compute_q(state, graph.edges[index]) for index in graph.out_edges(0)]
            greedy = graph.out_edges(0)[int(np.argmin(q))]
            self.assertEqual(UCB.select_action(state, params, graph, 0), greedy, msg=f"trial {trial}")


if __name__ == "__main__":
    unittest.main()
