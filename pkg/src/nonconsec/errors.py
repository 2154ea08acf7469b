class InvalidInputError(ValueError):
    """An argument is outside the domain of the operation."""


class OracleCeilingError(ValueError):
    """Exhaustive enumeration was requested above the configured size limit."""

    def __init__(self, n: int, ceiling: int):
        super().__init__(
            f"n={n} exceeds the oracle ceiling of {ceiling}; "
            f"raise the ceiling explicitly to enumerate S_{n}"
        )
        self.n = n
        self.ceiling = ceiling


class SeriesDomainError(ValueError):
    """A power-series operation was applied outside its domain."""


class InconsistencyError(RuntimeError):
    """Two computations that must agree did not. Always a bug."""
