"""
Exact counts from closed forms and recurrences.

All values are Python ints. Sequences for pattern 321 are indexed from 1:
``d_sequence(n)[i]`` is d_{i+1}.
"""

from __future__ import annotations

import math
from functools import lru_cache

from nonconsec.errors import InconsistencyError, InvalidInputError


def _check_index(m: int, name: str = "index") -> None:
    if m < 0:
        raise InvalidInputError(f"{name} must be nonnegative, got {m}")


def fibonacci(m: int) -> int:
    """F_m with F_0 = 0 and F_1 = F_2 = 1."""
    _check_index(m)
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def catalan(m: int) -> int:
    _check_index(m)
    return math.comb(2 * m, m) // (m + 1)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def d_sequence(n_max: int) -> list[int]:
    """
    d_1..d_{n_max}: avoiders of nonconsecutive 321 that do not open with a 321.

    Computed from d_n = C_n + sum_{k=1}^{n-3} C_{k+1} d_{n-2-k}, which needs
    no seed values.

    >>> d_sequence(6)
    [1, 2, 5, 16, 51, 166]
    """
    if n_max < 1:
        raise InvalidInputError(f"n_max must be at least 1, got {n_max}")
    d = [0]  # d[0] is never read; keeps d[n] == d_n
    for n in range(1, n_max + 1):
        d.append(catalan(n) + sum(catalan(k + 1) * d[n - 2 - k] for k in range(1, n - 2)))
    return d[1:]


def a_sequence_recurrence(n_max: int) -> list[int]:
    """
    a_1..a_{n_max}: avoiders of nonconsecutive 321.

    Evaluated twice, as a_n = d_n + d_{n-2} and as the convolution
    a_n = C_n + sum_{k=1}^{n-2} C_k d_{n-k-1}; the two must agree.
    """
    d = [0] + d_sequence(n_max)
    by_split = []
    by_convolution = []
    for n in range(1, n_max + 1):
        by_split.append(d[n] + (d[n - 2] if n >= 3 else 0))
        by_convolution.append(
            catalan(n) + sum(catalan(k) * d[n - k - 1] for k in range(1, n - 1))
        )
    if by_split != by_convolution:
        bad = next(i for i, (x, y) in enumerate(zip(by_split, by_convolution)) if x != y)
        raise InconsistencyError(
            f"a_{bad + 1}: d_n + d_(n-2) gives {by_split[bad]}, "
            f"convolution gives {by_convolution[bad]}"
        )
    return by_split


def count_21_formula(n: int) -> int:
    _check_index(n, "n")
    return fibonacci(n + 1)


def count_321_recurrence(n: int) -> int:
    _check_index(n, "n")
    if n == 0:
        return 1
    return a_sequence_recurrence(n)[-1]


def e_nk_formula(n: int, k: int) -> int:
    """Permutations of [n] avoiding nonconsecutive 132 with exactly k 132s."""
    return binomial(n - 2 * k, k) * catalan(n - 2 * k) if n - 2 * k >= 0 else 0


def count_132_formula(n: int) -> int:
    """
    sum_{k=0}^{floor(n/3)} binom(n-2k, k) C_{n-2k}.

    >>> [count_132_formula(n) for n in range(9)]
    [1, 1, 2, 6, 18, 57, 190, 654, 2306]
    """
    _check_index(n, "n")
    return sum(e_nk_formula(n, k) for k in range(n // 3 + 1))
