"""
The structural maps behind the counts, each with an explicit inverse.

swap21         gap-2 subsets of [1, n-1]          <-> nonconsecutive-21 avoiders
b_to_d         B(n)                               <-> D(n-2)
split_321      A(n,k), 2 <= k <= n-2              <-> C(k) x B(n-k+1)
decompose_132  E(n,k)                             <-> gap-3 subsets of [2, n-1] x 132-avoiders of [n-2k]

Every map checks its domain eagerly by scanning for occurrences.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from nonconsec.errors import InconsistencyError, InvalidInputError
from nonconsec.oracle import ClassLabel, is_member
from nonconsec.perm_core import (
    P21,
    P132,
    P321,
    Perm,
    as_perm,
    avoids_nonconsecutive,
    contains,
    occurrences,
    reduce,
)


@dataclass(frozen=True)
class ScatteredSet:
    """Integers in [lo, hi] whose consecutive members differ by at least `min_gap`."""

    lo: int
    hi: int
    elements: tuple[int, ...]
    min_gap: int

    def __post_init__(self):
        elements = tuple(sorted(int(e) for e in self.elements))
        object.__setattr__(self, "elements", elements)
        for e in elements:
            if not self.lo <= e <= self.hi:
                raise InvalidInputError(f"{e} lies outside [{self.lo}, {self.hi}]")
        for a, b in zip(elements, elements[1:]):
            if b - a < self.min_gap:
                raise InvalidInputError(
                    f"{a} and {b} are closer than the required gap {self.min_gap}"
                )

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def scattered_subsets(lo: int, hi: int, min_gap: int) -> list[ScatteredSet]:
    """Every scattered subset of [lo, hi], in lexicographic order of element tuples."""
    found: list[tuple[int, ...]] = []

    def grow(chosen: tuple[int, ...], start: int) -> None:
        found.append(chosen)
        for e in range(start, hi + 1):
            grow(chosen + (e,), e + min_gap)

    grow((), lo)
    return [ScatteredSet(lo, hi, s, min_gap) for s in sorted(found)]


def _as_set(s: ScatteredSet | Iterable[int], lo: int, hi: int, gap: int) -> ScatteredSet:
    if isinstance(s, ScatteredSet):
        if (s.lo, s.hi, s.min_gap) != (lo, hi, gap):
            # revalidate against the interval this map needs
            return ScatteredSet(lo, hi, s.elements, gap)
        return s
    return ScatteredSet(lo, hi, tuple(s), gap)


# -- pattern 21 --------------------------------------------------------------


def scattered_to_perm(n: int, s: ScatteredSet | Iterable[int]) -> Perm:
    """
    Swap positions i and i+1 of the identity for each i in `s`.

    >>> scattered_to_perm(4, {1, 3})
    (2, 1, 4, 3)
    """
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    s = _as_set(s, 1, n - 1, 2)
    p = list(range(1, n + 1))
    for i in s:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def perm_to_scattered(p: Sequence[int]) -> ScatteredSet:
    """The swap positions of a nonconsecutive-21 avoider, i.e. its descents."""
    p = as_perm(p)
    if not avoids_nonconsecutive(p, P21):
        raise InvalidInputError(f"{p} contains a nonconsecutive 21")
    n = len(p)
    return ScatteredSet(1, n - 1, tuple(i for i in range(1, n) if p[i - 1] > p[i]), 2)


# -- pattern 321: B(n) <-> D(n-2) --------------------------------------------


def b_to_d(p: Sequence[int]) -> Perm:
    """
    Drop the 2 and 1 sitting in positions 2 and 3 and lower the rest by 2.

    >>> b_to_d((4, 2, 1, 3))
    (2, 1)
    """
    p = as_perm(p)
    n = len(p)
    if n < 3 or not is_member(p, ClassLabel("B", n)):
        raise InvalidInputError(f"{p} is not in B({n})")
    if p[1] != 2 or p[2] != 1:
        raise InconsistencyError(f"{p} is in B({n}) but does not have 2, 1 in positions 2, 3")
    return tuple(a - 2 for a in (p[0], *p[3:]))


def d_to_b(q: Sequence[int]) -> Perm:
    """Inverse of `b_to_d`: raise every entry by 2 and put 2, 1 after the first."""
    q = as_perm(q)
    m = len(q)
    if m < 1 or not is_member(q, ClassLabel("D", m)):
        raise InvalidInputError(f"{q} is not in D({m}) for any m >= 1")
    return (q[0] + 2, 2, 1, *(a + 2 for a in q[1:]))


# -- pattern 321: A(n,k) <-> C(k) x B(n-k+1) -----------------------------------


@dataclass(frozen=True)
class SplitPair:
    sigma: Perm
    tau: Perm


def first_321_position(p: Sequence[int]) -> int | None:
    occ = occurrences(p, P321)
    return occ[0][0] if occ else None


def split_321(p: Sequence[int], k: int | None = None) -> SplitPair:
    """
    Split a member of A(n,k) into sigma in C(k) and tau in B(n-k+1).

    sigma is the first k-1 entries followed by the entry in position k+2;
    tau is everything from position k on, reduced.

    >>> split_321((1, 4, 3, 2, 5))
    SplitPair(sigma=(1, 2), tau=(3, 2, 1, 4))
    """
    p = as_perm(p)
    n = len(p)
    start = first_321_position(p)
    if start is None:
        raise InvalidInputError(f"{p} contains no 321")
    if k is not None and k != start:
        raise InvalidInputError(f"first 321 of {p} starts at {start}, not {k}")
    k = start
    if not 2 <= k <= n - 2:
        raise InvalidInputError(f"split needs 2 <= k <= n-2, got k={k} for n={n}")
    if not is_member(p, ClassLabel("A", n, k)):
        raise InvalidInputError(f"{p} is not in A({n},{k})")
    sigma = (*p[: k - 1], p[k + 1])
    if sorted(sigma) != list(range(1, k + 1)):
        raise InconsistencyError(f"sigma={sigma} from {p} is not a permutation of [1..{k}]")
    return SplitPair(sigma=sigma, tau=reduce(p[k - 1:]))


def unsplit_321(sigma: Sequence[int], tau: Sequence[int]) -> Perm:
    """
    Inverse of `split_321`: keep sigma's first k-1 entries, then lay tau out
    order-isomorphically on the values {sigma_k} together with {k+1, ..., n}.

    >>> unsplit_321((1, 2), (3, 2, 1, 4))
    (1, 4, 3, 2, 5)
    """
    sigma, tau = as_perm(sigma), as_perm(tau)
    k = len(sigma)
    if k < 2:
        raise InvalidInputError(f"unsplit needs sigma of length at least 2, got {sigma}")
    if contains(sigma, P321):
        raise InvalidInputError(f"sigma={sigma} contains a 321")
    if len(tau) < 3 or not is_member(tau, ClassLabel("B", len(tau))):
        raise InvalidInputError(f"tau={tau} is not in B({len(tau)})")
    n = k + len(tau) - 1
    values = [sigma[-1], *range(k + 1, n + 1)]
    return (*sigma[:-1], *(values[t - 1] for t in tau))


# -- pattern 132: E(n,k) <-> gap-3 subsets x 132-avoiders ----------------------


def decompose_132(p: Sequence[int]) -> tuple[ScatteredSet, Perm]:
    """
    Record the middle positions of the 132s, then delete the outer two
    entries of each and reduce.

    >>> s, q = decompose_132((10, 9, 5, 7, 6, 8, 2, 4, 3, 1))
    >>> s.elements, q
    ((4, 8), (6, 5, 3, 4, 2, 1))
    """
    p = as_perm(p)
    n = len(p)
    if not avoids_nonconsecutive(p, P132):
        raise InvalidInputError(f"{p} contains a nonconsecutive 132")
    occ = occurrences(p, P132)
    middles = ScatteredSet(2, n - 1, tuple(o[1] for o in occ), 3)
    dropped = {i for o in occ for i in (o[0], o[2])}
    rest = [a for i, a in enumerate(p, start=1) if i not in dropped]
    return middles, reduce(rest)


def compose_132_states(
    n: int, s: ScatteredSet | Iterable[int], q: Sequence[int]
) -> list[tuple[int | None, ...]]:
    """
    The partial fillings produced while building `compose_132(n, s, q)`.

    The first state has q written into the positions not adjacent to any
    member of s (None marks a blank). Each later state fills the blanks
    around one member of s, working left to right. The last state is the
    finished permutation.
    """
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    s = _as_set(s, 2, n - 1, 3)
    q = as_perm(q)
    if len(q) != n - 2 * len(s):
        raise InvalidInputError(
            f"q must have length n - 2|s| = {n - 2 * len(s)}, got {len(q)}"
        )
    if contains(q, P132):
        raise InvalidInputError(f"q={q} contains a 132")

    blanks = {b for i in s for b in (i - 1, i + 1)}
    cells: list[int | None] = [None] * (n + 1)  # 1-based, cells[0] unused
    it = iter(q)
    for pos in range(1, n + 1):
        if pos not in blanks:
            cells[pos] = next(it)
    states = [tuple(cells[1:])]

    for i in s:
        a = cells[i]
        low = [cells[pos] for pos in range(i + 1, n + 1) if cells[pos] is not None and cells[pos] < a]
        j = len(low)
        if sorted(low) != list(range(1, j + 1)):
            raise InconsistencyError(
                f"entries after position {i} below {a} are {sorted(low)}, not an initial segment"
            )
        for pos in range(1, n + 1):
            if cells[pos] is not None and cells[pos] > j:
                cells[pos] += 2
        cells[i - 1] = j + 1
        cells[i + 1] = j + 2
        states.append(tuple(cells[1:]))
    return states


def compose_132(n: int, s: ScatteredSet | Iterable[int], q: Sequence[int]) -> Perm:
    """
    Inverse of `decompose_132`.

    >>> compose_132(10, {4, 8}, (6, 5, 3, 4, 2, 1))
    (10, 9, 5, 7, 6, 8, 2, 4, 3, 1)
    """
    return compose_132_states(n, s, q)[-1]
