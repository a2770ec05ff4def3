from banditroute.data.enums import Algorithm, DistributionKind, GraphInvariant, UpdateRule

__all__ = ["Algorithm", "DistributionKind", "GraphInvariant", "UpdateRule"]
