import copy
import json
import unittest

import numpy as np

from banditroute import paths
from banditroute.data.enums import DistributionKind, GraphInvariant
from banditroute.exceptions import GenerationError, GraphFormatError, GraphValidationError
from banditroute.managers.graph_manager import GraphManager
from banditroute.managers.resource_manager import ResourceManager
from banditroute.models.cost_distribution import CostDistribution
from banditroute.models.sample_stream import SampleStream


def deterministic(source, target, value):
    return {"source": source, "target": target, "dist": {"kind": "deterministic", "value": value}}


def gaussian(source, target, mean, variance=2.0):
    return {"source": source, "target": target, "dist": {"kind": "gaussian", "mean": mean, "variance": variance}}


def three_node_document():
    return {
        "nodes": 3,
        "origin": 0,
        "destination": 2,
        "edges": [gaussian(0, 1, 1.0), gaussian(1, 2, 2.0), gaussian(0, 2, 4.0)],
    }


class TestLoadGraph(unittest.TestCase):

    def test_three_node_document(self):
        graph = GraphManager.load_graph(json.dumps(three_node_document()))
        self.assertEqual(graph.nodes, 3)
        self.assertEqual(len(graph.edges), 3)
        self.assertEqual(graph.origin, 0)
        self.assertEqual(graph.destination, 2)
        self.assertEqual(graph.out_edges(0), (0, 2))
        self.assertEqual(graph.out_edges(1), (1,))
        self.assertEqual(graph.out_edges(2), ())
        self.assertEqual(graph.mean(2), 4.0)
        self.assertEqual(list(graph.offsets), [0, 2, 3, 3])
        self.assertEqual(list(graph.edge_order), [0, 2, 1])

    def test_unreachable_destination(self):
        document = three_node_document()
        document["edges"] = [gaussian(0, 1, 1.0), gaussian(2, 0, 1.0)]
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.DESTINATION_REACHABLE)

    def test_stranded_node_reachable_from_origin(self):
        document = {
            "nodes": 4,
            "origin": 0,
            "destination": 3,
            "edges": [gaussian(0, 3, 5.0), gaussian(0, 1, 1.0), gaussian(1, 2, 1.0), gaussian(2, 1, 1.0)],
        }
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.DESTINATION_REACHABLE)

    def test_unreachable_island_is_allowed(self):
        document = {
            "nodes": 4,
            "origin": 0,
            "destination": 3,
            "edges": [gaussian(0, 3, 5.0), gaussian(1, 2, 1.0), gaussian(2, 1, 1.0)],
        }
        graph = GraphManager.load_graph(json.dumps(document))
        self.assertEqual(graph.reachable, frozenset({0, 3}))
        self.assertFalse(graph.reaches_destination[1])

    def test_self_loop(self):
        document = three_node_document()
        document["edges"].append(gaussian(1, 1, 1.0))
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.NO_SELF_LOOPS)

    def test_non_positive_mean(self):
        for mean in (0.0, -3.0):
            document = three_node_document()
            document["edges"][1] = gaussian(1, 2, mean)
            with self.assertRaises(GraphValidationError) as context:
                GraphManager.load_graph(json.dumps(document))
            self.assertEqual(context.exception.invariant, GraphInvariant.POSITIVE_MEAN)

    def test_negative_variance_and_value(self):
        document = three_node_document()
        document["edges"][0] = gaussian(0, 1, 1.0, variance=-1.0)
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.NONNEGATIVE_VARIANCE)

        document = three_node_document()
        document["edges"][0] = deterministic(0, 1, -1.0)
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.NONNEGATIVE_VALUE)

    def test_zero_deterministic_cost_is_valid(self):
        document = three_node_document()
        document["edges"][0] = deterministic(0, 1, 0.0)
        graph = GraphManager.load_graph(json.dumps(document))
        self.assertEqual(graph.mean(0), 0.0)

    def test_endpoints(self):
        document = three_node_document()
        document["destination"] = 0
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.DISTINCT_ENDPOINTS)

        document = three_node_document()
        document["origin"] = 7
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.NODE_RANGE)

        document = three_node_document()
        document["nodes"] = 1
        with self.assertRaises(GraphValidationError) as context:
            GraphManager.load_graph(json.dumps(document))
        self.assertEqual(context.exception.invariant, GraphInvariant.NODE_COUNT)

    def test_destination_out_edges_are_ignored_for_reachability(self):
        document = three_node_document()
        document["edges"].append(gaussian(2, 0, 1.0))
        graph = GraphManager.load_graph(json.dumps(document))
        self.assertEqual(graph.out_edges(2), (3,))

    def test_malformed_documents(self):
        malformed = [
            "{",
            "[]",
            json.dumps({"origin": 0, "destination": 2, "edges": []}),
            json.dumps({**three_node_document(), "nodes": "3"}),
            json.dumps({**three_node_document(), "origin": True}),
            json.dumps({**three_node_document(), "edges": {}}),
            json.dumps({**three_node_document(), "edges": [1, 2]}),
            json.dumps({**three_node_document(), "edges": [{"source": 0, "target": 1}]}),
            json.dumps({**three_node_document(), "edges": [{"source": 0, "target": 1, "dist": {"kind": "poisson"}}]}),
            json.dumps({**three_node_document(), "edges": [{"source": 0, "target": 1, "dist": {"kind": "gaussian"}}]}),
            json.dumps({**three_node_document(), "edges": [{"source": "0", "target": 1, "dist": {}}]}),
        ]
        for document in malformed:
            with self.assertRaises(GraphFormatError, msg=document):
                GraphManager.load_graph(document)

    def test_fuzzed_documents_are_accepted_or_rejected_with_a_reason(self):
        rng = np.random.default_rng(2024)
        base = json.loads(GraphManager.dump_graph(GraphManager.load_example(paths.example_network_22)))
        replacements = [None, -1, 0, 1, 2.5, "x", True, [], {}, 100]
        fields = ["source", "target", "dist", "mean", "variance", "kind"]

        for _ in range(300):
            document = copy.deepcopy(base)
            choice = int(rng.integers(4))
            if choice == 0:
                key = ["nodes", "origin", "destination"][int(rng.integers(3))]
                document[key] = replacements[int(rng.integers(len(replacements)))]
            elif choice == 1:
                edge = document["edges"][int(rng.integers(len(document["edges"])))]
                field = fields[int(rng.integers(len(fields)))]
                target = edge["dist"] if field in ("mean", "variance", "kind") else edge
                target[field] = replacements[int(rng.integers(len(replacements)))]
            elif choice == 2:
                del document["edges"][int(rng.integers(len(document["edges"])))]
            else:
                edge = document["edges"][int(rng.integers(len(document["edges"])))]
                edge["target"] = edge["source"]

            try:
                GraphManager.load_graph(json.dumps(document))
            except GraphValidationError as e:
                self.assertIsInstance(e.invariant, GraphInvariant)
            except GraphFormatError as e:
                self.assertTrue(str(e))


class TestSerialization(unittest.TestCase):

    def test_dump_is_inverse_of_load(self):
        graph = GraphManager.load_example(paths.example_network_22)
        document = GraphManager.dump_graph(graph)
        self.assertEqual(GraphManager.load_graph(document), graph)
        self.assertEqual(GraphManager.dump_graph(GraphManager.load_graph(document)), document)

    def test_examples(self):
        self.assertEqual(GraphManager.list_examples(), ["example_network_22", "example_network_3"])
        graph = GraphManager.load("example:example_network_22")
        self.assertEqual(graph.nodes, 22)
        self.assertEqual(len(graph.edges), 25)
        self.assertEqual((graph.origin, graph.destination), (0, 21))
        for edge in graph.edges:
            self.assertEqual(edge.distribution.kind, DistributionKind.GAUSSIAN)
            self.assertEqual(edge.distribution.variance, 2.0)

        small = GraphManager.load_example("example_network_3.json")
        self.assertEqual([edge.mean for edge in small.edges], [1.0, 2.0, 4.0])

    def test_missing_example(self):
        with self.assertRaises(FileNotFoundError):
            GraphManager.load_example("example_network_missing")

    def test_resource_cache(self):
        ResourceManager.reset_cache()
        raw = ResourceManager.load_raw("example_network_3.json", cache=False)
        self.assertNotIn("example_network_3.json", ResourceManager._raw_data)

        self.assertEqual(ResourceManager.load_raw("example_network_3.json"), raw)
        self.assertIn("example_network_3.json", ResourceManager._raw_data)
        ResourceManager.reset_cache()
        self.assertEqual(ResourceManager._raw_data, {})


class TestSampleCost(unittest.TestCase):

    def test_deterministic(self):
        distribution = CostDistribution.deterministic(5.0)
        stream = SampleStream(1)
        self.assertTrue(all(stream.cost(distribution) == 5.0 for _ in range(100)))

    def test_deterministic_costs_consume_no_randomness(self):
        first, second = SampleStream(9), SampleStream(9)
        for _ in range(10):
            first.cost(CostDistribution.deterministic(1.0))
        gaussian_cost = CostDistribution.gaussian(10.0, 2.0)
        self.assertEqual(first.cost(gaussian_cost), second.cost(gaussian_cost))

    def test_clamping(self):
        stream = SampleStream(3)
        distribution = CostDistribution.gaussian(0.5, 4.0)
        samples = np.array([stream.cost(distribution) for _ in range(5_000)])
        self.assertTrue(np.all(samples >= 0.0))
        self.assertTrue(np.any(samples == 0.0))

    def test_law_of_large_numbers(self):
        stream = SampleStream(11)
        distribution = CostDistribution.gaussian(10.0, 2.0)
        samples = [stream.cost(distribution) for _ in range(100_000)]
        self.assertAlmostEqual(float(np.mean(samples)), 10.0, delta=0.05)

    def test_reproducibility(self):
        graph = GraphManager.load_example(paths.example_network_22)
        first, second = SampleStream(42), SampleStream(42)
        sequence = [int(i) % len(graph.edges) for i in range(200)]
        self.assertEqual(
            [graph.sample_cost(index, first) for index in sequence],
            [graph.sample_cost(index, second) for index in sequence],
        )

    def test_uniform_and_choice(self):
        stream = SampleStream(5)
        for _ in range(1_000):
            self.assertTrue(0.0 <= stream.uniform() < 1.0)
            self.assertIn(stream.choice(3), (0, 1, 2))


class TestGenerateNetwork(unittest.TestCase):

    def test_smallest_network(self):
        graph = GraphManager.generate_network(nodes=2, connectivity=1, seed=0)
        self.assertEqual(len(graph.edges), 1)
        self.assertEqual((graph.edges[0].source, graph.edges[0].target), (0, 1))
        self.assertEqual((graph.origin, graph.destination), (0, 1))

    def test_twenty_two_nodes(self):
        graph = GraphManager.generate_network(nodes=22, connectivity=3, mean_range=(5, 30), variance=2, seed=7)
        self.assertEqual(graph.nodes, 22)
        for edge in graph.edges:
            self.assertEqual(edge.distribution.variance, 2.0)
            self.assertTrue(5.0 <= edge.mean <= 30.0)
            self.assertNotEqual(edge.source, edge.target)
        for node in graph.reachable:
            self.assertTrue(graph.reaches_destination[node])

    def test_determinism(self):
        first = GraphManager.generate_network(nodes=22, seed=7)
        second = GraphManager.generate_network(nodes=22, seed=7)
        self.assertEqual(GraphManager.dump_graph(first), GraphManager.dump_graph(second))
        other = GraphManager.generate_network(nodes=22, seed=8)
        self.assertNotEqual(GraphManager.dump_graph(first), GraphManager.dump_graph(other))

    def test_many_seeds(self):
        for seed in range(100):
            nodes = 2 + seed % 30
            graph = GraphManager.generate_network(nodes=nodes, connectivity=1 + (seed % 5) / 2, seed=seed)
            self.assertEqual(GraphManager.load_graph(GraphManager.dump_graph(graph)), graph)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            GraphManager.generate_network(nodes=1)
        with self.assertRaises(ValueError):
            GraphManager.generate_network(nodes=5, connectivity=0.5)
        with self.assertRaises(ValueError):
            GraphManager.generate_network(nodes=5, mean_range=(0, 10))
        with self.assertRaises(ValueError):
            GraphManager.generate_network(nodes=5, variance=-1)

    def test_generation_error_message(self):
        error = GenerationError(attempts=3)
        self.assertEqual(error.attempts, 3)
        self.assertIn("3 repair attempts", str(error))


if __name__ == "__main__":
    unittest.main()
