from banditroute.learners.regret_diagnostics import RegretDiagnostics
from banditroute.learners.rtdp_learner import RTDPLearner
from banditroute.learners.ucb import UCB
from banditroute.learners.value_iteration_ucb_learner import ValueIterationUCBLearner
from banditroute.managers.graph_manager import GraphManager
from banditroute.managers.results_manager import ResultsManager
from banditroute.models.experiment_config import ExperimentConfig
from banditroute.models.stochastic_graph import StochasticGraph
from banditroute.services.experiment_service import ExperimentService
from banditroute.services.oracle_service import OracleService

__all__ = [
    "RegretDiagnostics",
    "RTDPLearner",
    "UCB",
    "ValueIterationUCBLearner",
    "GraphManager",
    "ResultsManager",
    "ExperimentConfig",
    "StochasticGraph",
    "ExperimentService",
    "OracleService",
]
