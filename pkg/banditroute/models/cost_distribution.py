import math
from dataclasses import dataclass
from typing import Any, Optional

from typing_extensions import Self

from banditroute.data.enums import DistributionKind
from banditroute.exceptions.graph_format_error import GraphFormatError


@dataclass(frozen=True)
class CostDistribution:
    """
    The travel-time distribution of a single road segment, in seconds.

    Attributes:
        kind (DistributionKind): Either a Gaussian with the given mean and variance, or a deterministic cost.
        mean (Optional[float]): The mean of a Gaussian cost.
        variance (Optional[float]): The variance of a Gaussian cost.
        value (Optional[float]): The constant cost of a deterministic edge.
    """

    kind: DistributionKind
    mean: Optional[float] = None
    variance: Optional[float] = None
    value: Optional[float] = None

    @classmethod
    def gaussian(cls, mean: float, variance: float) -> Self:
        return cls(kind=DistributionKind.GAUSSIAN, mean=float(mean), variance=float(variance))

    @classmethod
    def deterministic(cls, value: float) -> Self:
        return cls(kind=DistributionKind.DETERMINISTIC, value=float(value))

    @property
    def expected(self) -> float:
        """
        The true expected cost of the distribution.
        """
        return self.mean if self.kind == DistributionKind.GAUSSIAN else self.value

    @property
    def std(self) -> float:
        """
        The standard deviation of the distribution (zero for deterministic costs).
        """
        return math.sqrt(self.variance) if self.kind == DistributionKind.GAUSSIAN else 0.0

    def to_dict(self) -> dict[str, Any]:
        """
        Convert the distribution into the `dist` record of a graph document.

        Returns:
            dict[str, Any]: `{kind, mean, variance}` or `{kind, value}`.
        """
        if self.kind == DistributionKind.GAUSSIAN:
            return {"kind": self.kind.value, "mean": self.mean, "variance": self.variance}
        return {"kind": self.kind.value, "value": self.value}

    @classmethod
    def from_dict(cls, data: Any, context: str = "dist") -> Self:
        """
        Parse the `dist` record of a graph document. Only the shape of the record is checked here; value ranges are
        validated by `StochasticGraph`.

        Args:
            data (Any): The decoded `dist` record.
            context (str): A description of where the record was found, used in error messages.

        Returns:
            CostDistribution: The parsed distribution.

        Raises:
            GraphFormatError: If the record is not a mapping, names an unknown kind, or lacks a numeric field.
        """
        if not isinstance(data, dict):
            raise GraphFormatError(context, "expected a record with a `kind` field")

        try:
            kind = DistributionKind(data.get("kind"))
        except ValueError:
            kinds = ", ".join(f"`{kind.value}`" for kind in DistributionKind)
            raise GraphFormatError(context, f"unknown distribution kind `{data.get('kind')}`, expected one of {kinds}")

        fields = ("mean", "variance") if kind == DistributionKind.GAUSSIAN else ("value",)
        values = {}
        for name in fields:
            number = data.get(name)
            if isinstance(number, bool) or not isinstance(number, (int, float)) or not math.isfinite(number):
                raise GraphFormatError(f"{context}.{name}", "expected a finite number")
            values[name] = float(number)

        return cls(kind=kind, **values)

    def __str__(self) -> str:
        if self.kind == DistributionKind.GAUSSIAN:
            return f"N({self.mean:g}, {self.variance:g})"
        return f"Det({self.value:g})"
