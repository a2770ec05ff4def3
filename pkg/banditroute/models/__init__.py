from banditroute.models.aggregate_result import AggregateResult
from banditroute.models.cost_distribution import CostDistribution
from banditroute.models.edge import Edge
from banditroute.models.episode_trace import EpisodeTrace
from banditroute.models.experiment_config import ExperimentConfig
from banditroute.models.learner_state import LearnerState
from banditroute.models.optimal_solution import OptimalSolution
from banditroute.models.run_result import RunResult
from banditroute.models.sample_stream import SampleStream
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.models.ucb_params import UcbParams

__all__ = [
    "AggregateResult",
    "CostDistribution",
    "Edge",
    "EpisodeTrace",
    "ExperimentConfig",
    "LearnerState",
    "OptimalSolution",
    "RunResult",
    "SampleStream",
    "StochasticGraph",
    "UcbParams",
]
