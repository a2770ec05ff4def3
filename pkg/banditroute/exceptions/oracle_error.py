class OracleError(RuntimeError):
    """
    Internal error raised by the exact solver when a validated graph turns out to have no origin-destination path.
    """
