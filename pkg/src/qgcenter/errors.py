"""Package-level exception types."""


class ConsistencyError(RuntimeError):
    """An internal mathematical consistency check failed.

    Raised when a computation produces a value the theory forbids (negative
    tensor multiplicities, non-scalar central action, a failed exact identity);
    the CLI maps this to exit status 1 with a machine-readable record.
    """
