from banditroute.services.experiment_service import ExperimentService
from banditroute.services.oracle_service import OracleService

__all__ = ["ExperimentService", "OracleService"]
