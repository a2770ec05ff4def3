from banditroute.managers.graph_manager import GraphManager
from banditroute.managers.resource_manager import ResourceManager
from banditroute.managers.results_manager import ResultsManager

__all__ = ["GraphManager", "ResourceManager", "ResultsManager"]
