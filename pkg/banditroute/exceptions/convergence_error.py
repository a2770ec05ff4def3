class ConvergenceError(RuntimeError):
    """
    Exception raised when synchronous value iteration fails to reach the requested threshold within the sweep cap.

    Args:
        sweeps (int): The number of sweeps performed.
        residual (float): The largest value change observed in the last sweep.
    """

    def __init__(self, sweeps: int, residual: float) -> None:
        self.sweeps = sweeps
        self.residual = residual
        self.message = f"value iteration did not converge after {sweeps} sweeps (residual {residual:.6g})"
        super().__init__(self.message)
