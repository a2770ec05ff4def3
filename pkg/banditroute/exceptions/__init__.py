from banditroute.exceptions.aggregation_error import AggregationError
from banditroute.exceptions.convergence_error import ConvergenceError
from banditroute.exceptions.dead_end_error import DeadEndError
from banditroute.exceptions.experiment_error import ExperimentError
from banditroute.exceptions.generation_error import GenerationError
from banditroute.exceptions.graph_format_error import GraphFormatError
from banditroute.exceptions.graph_validation_error import GraphValidationError
from banditroute.exceptions.oracle_error import OracleError
from banditroute.exceptions.path_overflow_error import PathOverflowError
from banditroute.exceptions.results_format_error import ResultsFormatError

__all__ = [
    "AggregationError",
    "ConvergenceError",
    "DeadEndError",
    "ExperimentError",
    "GenerationError",
    "GraphFormatError",
    "GraphValidationError",
    "OracleError",
    "PathOverflowError",
    "ResultsFormatError",
]
