from typing import Optional


class ExperimentError(RuntimeError):
    """
    Wraps an error raised by a learner with the run and episode in which it occurred.

    Args:
        run (int): Zero-based run index.
        episode (Optional[int]): One-based episode index, or None if the failure happened outside an episode.
        cause (Exception): The original error.
    """

    def __init__(self, run: int, episode: Optional[int], cause: Exception) -> None:
        self.run = run
        self.episode = episode
        self.cause = cause
        location = f"run {run}" + (f", episode {episode}" if episode is not None else "")
        self.message = f"{location}: {type(cause).__name__}: {cause}"
        super().__init__(self.message)
