import numpy as np

from banditroute.data.enums import DistributionKind
from banditroute.models.cost_distribution import CostDistribution


class SampleStream:
    """
    A seeded source of randomness owned by a single run. Every random draw of a run (edge costs and epsilon-greedy
    choices alike) is taken from one stream, so an identical seed and call sequence reproduce identical samples.

    Args:
        seed (int): An unsigned 64-bit seed for the PCG64 bit generator.
    """

    def __init__(self, seed: int) -> None:
        self.seed = int(seed)
        self._generator = np.random.Generator(np.random.PCG64(self.seed))

    def cost(self, distribution: CostDistribution) -> float:
        """
        Draw one realization of a cost distribution. Gaussian draws are clamped at zero; deterministic costs do not
        consume randomness.

        Args:
            distribution (CostDistribution): The distribution to sample.

        Returns:
            float: A non-negative cost.
        """
        if distribution.kind == DistributionKind.DETERMINISTIC:
            return distribution.value
        sample = distribution.mean + distribution.std * self._generator.standard_normal()
        return max(0.0, float(sample))

    def uniform(self) -> float:
        """
        Draw a float uniformly from [0, 1).
        """
        return float(self._generator.random())

    def choice(self, count: int) -> int:
        """
        Draw an integer uniformly from [0, count).
        """
        return int(self._generator.integers(count))

    def __repr__(self) -> str:
        return f"<SampleStream | seed={self.seed}>"
