from enum import Enum


class Algorithm(Enum):
    """
    The learning algorithms available to the experiment harness, keyed by their command-line identifiers.
    """

    RTDP_UCB = "rtdp-ucb"
    RTDP_STANDARD = "rtdp-standard"
    RTDP_EPSILON_GREEDY = "rtdp-eps"
    VALUE_ITERATION_UCB = "vi-ucb"

    @property
    def label(self) -> str:
        """
        The display name used in console tables.
        """
        return {
            Algorithm.RTDP_UCB: "RTDP_UCB",
            Algorithm.RTDP_STANDARD: "RTDP_Standard",
            Algorithm.RTDP_EPSILON_GREEDY: "RTDP_EpsilonGreedy",
            Algorithm.VALUE_ITERATION_UCB: "Value_Iteration_UCB",
        }[self]


class UpdateRule(Enum):
    """
    State-value update rules applied after an edge cost is observed.

    FULL_MIN re-minimizes V(s) over every outgoing action; MONOTONE only ever lowers V(s) using the action taken.
    """

    FULL_MIN = "full-min"
    MONOTONE = "monotone"


class DistributionKind(Enum):
    """
    Supported edge cost distributions, named as they appear in graph documents.
    """

    GAUSSIAN = "gaussian"
    DETERMINISTIC = "deterministic"


class GraphInvariant(Enum):
    """
    Structural invariants checked whenever a graph is loaded or generated. The value is the message reported when the
    invariant is violated.
    """

    NODE_COUNT = "graph must contain at least two nodes"
    NODE_RANGE = "every node id must lie in [0, nodes)"
    DISTINCT_ENDPOINTS = "origin and destination must differ"
    DENSE_EDGE_INDEX = "edge indices must be unique and dense in [0, |E|)"
    NO_SELF_LOOPS = "edges may not be self-loops"
    POSITIVE_MEAN = "gaussian means must be strictly positive"
    NONNEGATIVE_VARIANCE = "gaussian variances must be non-negative"
    NONNEGATIVE_VALUE = "deterministic costs must be non-negative"
    DESTINATION_REACHABLE = "destination must be reachable from every node reachable from the origin"
