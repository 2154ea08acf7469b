"""Permutations avoiding a nonconsecutive instance of a 2- or 3-letter pattern.

Every count is computed several independent ways (exhaustive search,
closed forms and recurrences, exact power series) so the results can be
checked against each other.
"""

__version__ = "0.1.0"

from nonconsec.errors import (
    InconsistencyError,
    InvalidInputError,
    OracleCeilingError,
    SeriesDomainError,
)
from nonconsec.perm_core import (
    Pattern,
    avoids_nonconsecutive,
    canonical_pattern,
    complement,
    format_perm,
    is_132_avoiding_by_characterization,
    occurrences,
    parse_perm,
    reduce,
    reverse,
)

__all__ = [
    "__version__",
    "InconsistencyError",
    "InvalidInputError",
    "OracleCeilingError",
    "SeriesDomainError",
    "Pattern",
    "avoids_nonconsecutive",
    "canonical_pattern",
    "complement",
    "format_perm",
    "is_132_avoiding_by_characterization",
    "occurrences",
    "parse_perm",
    "reduce",
    "reverse",
]
