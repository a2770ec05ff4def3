import math
import unittest

from banditroute import config, paths
from banditroute.learners.regret_diagnostics import RegretDiagnostics
from banditroute.managers.graph_manager import GraphManager
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.learner_state import LearnerState
from banditroute.models.ucb_params import UcbParams
from banditroute.services.oracle_service import OracleService


class TestRegretDiagnostics(unittest.TestCase):

    def setUp(self):
        self.graph = GraphManager.load_example(paths.example_network_3)
        self.oracle = OracleService.solve_exact(self.graph)

    def trace(self, edges, truncated=False):
        trace = EpisodeTrace(truncated=truncated)
        for edge_index in edges:
            trace.append(edge_index, self.graph.mean(edge_index))
        return trace

    def test_fresh_state(self):
        state = LearnerState.initial(self.graph)
        price, bellman = RegretDiagnostics.decompose(self.trace([0, 1]), state, self.graph, self.oracle, UcbParams())
        self.assertEqual(price, 2 * config.MAX_RADIUS)
        self.assertEqual(bellman, -5.0)

    def test_converged_state(self):
        state = LearnerState.initial(self.graph)
        state.N[:] = [2, 1, 0]
        for edge_index in range(3):
            state.record(edge_index, self.graph.mean(edge_index))
        state.V[:] = [3.0, 2.0, 0.0]

        price, bellman = RegretDiagnostics.decompose(self.trace([0, 1]), state, self.graph, self.oracle, UcbParams())
        self.assertAlmostEqual(price, math.sqrt(2.0 * math.log(2.0)), delta=1e-12)
        self.assertEqual(bellman, 0.0)

    def test_radius_uses_counts_before_episode(self):
        state = LearnerState.initial(self.graph)
        state.N[:] = [3, 3, 0]
        for edge_index in range(3):
            for _ in range(3):
                state.record(edge_index, 1.0)
        state.V[:] = [1.0, 1.0, 0.0]

        price, bellman = RegretDiagnostics.decompose(self.trace([0, 1]), state, self.graph, self.oracle, UcbParams())
        self.assertAlmostEqual(price, 2 * math.sqrt(2.0 * math.log(3.0) / 3), delta=1e-12)
        self.assertEqual(bellman, -3.0)

    def test_truncated_episode(self):
        state = LearnerState.initial(self.graph)
        with self.assertRaises(ValueError):
            RegretDiagnostics.decompose(self.trace([0], truncated=True), state, self.graph, self.oracle, UcbParams())


if __name__ == "__main__":
    unittest.main()
