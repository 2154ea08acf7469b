"""
Exhaustive ground truth over S_n.

Class membership is decided by scanning for pattern occurrences, never by a
formula. The search builds permutations left to right with values tried in
increasing order, so output is lexicographic. A prefix holding a forbidden
occurrence is abandoned: its positions stay fixed under extension, so every
completion would hold it too.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from nonconsec.errors import InvalidInputError, OracleCeilingError
from nonconsec.perm_core import (
    P132,
    P321,
    Pattern,
    Perm,
    avoids_nonconsecutive,
    contains,
    occurrences,
)

DEFAULT_CEILING = 10

_LABEL_RE = re.compile(r"^\s*([ABCDE])\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$")


@dataclass(frozen=True)
class ClassLabel:
    """
    One of the permutation classes A(n), B(n), C(n), D(n), A(n,k), E(n), E(n,k).

    A: avoid nonconsecutive 321.  B: members of A opening with 321 in
    positions 1-3.  C: no 321 at all.  D: members of A that are not in B.
    A(n,k): members of A whose first 321 starts at position k.
    E: avoid nonconsecutive 132.  E(n,k): members of E with exactly k 132s.
    """

    kind: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.kind not in "ABCDE" or len(self.kind) != 1:
            raise InvalidInputError(f"unknown class {self.kind!r}")
        if self.n < 0:
            raise InvalidInputError(f"class size must be nonnegative, got {self.n}")
        if self.k is None:
            return
        if self.kind == "A":
            if not 1 <= self.k <= self.n - 2:
                raise InvalidInputError(f"A(n,k) needs 1 <= k <= n-2, got {self}")
        elif self.kind == "E":
            if not 0 <= self.k <= self.n // 3:
                raise InvalidInputError(f"E(n,k) needs 0 <= k <= n/3, got {self}")
        else:
            raise InvalidInputError(f"class {self.kind} takes no second index")

    @classmethod
    def parse(cls, text: str) -> ClassLabel:
        m = _LABEL_RE.match(text)
        if not m:
            raise InvalidInputError(f"cannot parse class label {text!r}; expected e.g. A(5) or E(10,2)")
        kind, n, k = m.groups()
        return cls(kind, int(n), None if k is None else int(k))

    def __str__(self) -> str:
        if self.k is None:
            return f"{self.kind}({self.n})"
        return f"{self.kind}({self.n},{self.k})"


def _relation_test(pat: Pattern) -> Callable[[int, int, int], bool]:
    x, y, z = pat.perm
    xy, xz, yz = x < y, x < z, y < z
    return lambda a, b, c: (a < b) == xy and (a < c) == xz and (b < c) == yz


def _search(n: int, pat: Pattern, consecutive_ok: bool) -> Iterator[Perm]:
    """
    Permutations of [n] with no forbidden occurrence of `pat`, lexicographically.

    Forbidden means nonconsecutive when `consecutive_ok`, otherwise any.
    """
    prefix: list[int] = []
    used = [False] * (n + 1)

    if len(pat) == 2:
        want_less = pat.perm[0] < pat.perm[1]

        def bad(v: int) -> bool:
            m = len(prefix)
            stop = m - 1 if consecutive_ok else m
            return any((prefix[i] < v) == want_less for i in range(stop))
    else:
        matches = _relation_test(pat)

        def bad(v: int) -> bool:
            m = len(prefix)
            for j in range(1, m):
                b = prefix[j]
                for i in range(j):
                    if matches(prefix[i], b, v) and not (consecutive_ok and i == m - 2):
                        return True
            return False

    def extend() -> Iterator[Perm]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v] or bad(v):
                continue
            used[v] = True
            prefix.append(v)
            yield from extend()
            prefix.pop()
            used[v] = False

    return extend()


def _guard(n: int, ceiling: int) -> None:
    if n > ceiling:
        raise OracleCeilingError(n, ceiling)


def iter_avoiders(n: int, pat: Pattern, ceiling: int = DEFAULT_CEILING) -> Iterator[Perm]:
    """Permutations of [n] avoiding nonconsecutive `pat`, lexicographically."""
    _guard(n, ceiling)
    return _search(n, pat, consecutive_ok=True)


def _starts_with_321(p: Perm) -> bool:
    return len(p) >= 3 and p[0] > p[1] > p[2]


def _first_321_start(p: Perm) -> int | None:
    occ = occurrences(p, P321)
    return min(o[0] for o in occ) if occ else None


def iter_class(label: ClassLabel, ceiling: int = DEFAULT_CEILING) -> Iterator[Perm]:
    _guard(label.n, ceiling)
    n, k = label.n, label.k
    if label.kind == "C":
        return _search(n, P321, consecutive_ok=False)
    if label.kind == "E":
        members = _search(n, P132, consecutive_ok=True)
        if k is None:
            return members
        return (p for p in members if len(occurrences(p, P132)) == k)
    members = _search(n, P321, consecutive_ok=True)
    if label.kind == "B":
        return (p for p in members if _starts_with_321(p))
    if label.kind == "D":
        return (p for p in members if not _starts_with_321(p))
    if k is None:
        return members
    return (p for p in members if _first_321_start(p) == k)


def enumerate_class(label: ClassLabel | str, ceiling: int = DEFAULT_CEILING) -> list[Perm]:
    """
    All members of a class in lexicographic order.

    >>> enumerate_class("B(3)")
    [(3, 2, 1)]
    """
    if isinstance(label, str):
        label = ClassLabel.parse(label)
    return list(iter_class(label, ceiling))


def count_class(label: ClassLabel | str, ceiling: int = DEFAULT_CEILING) -> int:
    if isinstance(label, str):
        label = ClassLabel.parse(label)
    return sum(1 for _ in iter_class(label, ceiling))


def count_avoiders_bruteforce(n: int, pat: Pattern, ceiling: int = DEFAULT_CEILING) -> int:
    return sum(1 for _ in iter_avoiders(n, pat, ceiling))


def is_member(p: Perm, label: ClassLabel) -> bool:
    """Decide membership of a single permutation from scratch."""
    if len(p) != label.n:
        return False
    if label.kind == "C":
        return not contains(p, P321)
    if label.kind == "E":
        if not avoids_nonconsecutive(p, P132):
            return False
        return label.k is None or len(occurrences(p, P132)) == label.k
    if not avoids_nonconsecutive(p, P321):
        return False
    if label.kind == "B":
        return _starts_with_321(p)
    if label.kind == "D":
        return not _starts_with_321(p)
    return label.k is None or _first_321_start(p) == label.k


def class_census(n: int, ceiling: int = DEFAULT_CEILING) -> dict[ClassLabel, int]:
    """
    Sizes of every class at size n, from one pass per pattern rather than one
    pass per label. Agrees with `count_class` label by label.
    """
    _guard(n, ceiling)
    census = {ClassLabel(kind, n): 0 for kind in "ABCDE"}
    for k in range(1, n - 1):
        census[ClassLabel("A", n, k)] = 0
    for k in range(n // 3 + 1):
        census[ClassLabel("E", n, k)] = 0

    for p in _search(n, P321, consecutive_ok=True):
        census[ClassLabel("A", n)] += 1
        census[ClassLabel("B" if _starts_with_321(p) else "D", n)] += 1
        start = _first_321_start(p)
        if start is not None:
            census[ClassLabel("A", n, start)] += 1
    census[ClassLabel("C", n)] = sum(1 for _ in _search(n, P321, consecutive_ok=False))
    for p in _search(n, P132, consecutive_ok=True):
        census[ClassLabel("E", n)] += 1
        census[ClassLabel("E", n, len(occurrences(p, P132)))] += 1
    return census
