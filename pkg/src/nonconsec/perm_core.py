"""
Permutations in one-line notation, short patterns, and nonconsecutive
avoidance.

A permutation of [n] is a plain tuple of ints holding each of 1..n once.
Positions are 1-based in every public function; an occurrence of a pattern
is the tuple of positions (i_1 < ... < i_k) it occupies.

>>> occurrences((3, 2, 1), Pattern.parse("21"))
[(1, 2), (1, 3), (2, 3)]
>>> avoids_nonconsecutive((2, 1, 3), Pattern.parse("21"))
True
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from nonconsec.errors import InvalidInputError

Perm = tuple[int, ...]
Occurrence = tuple[int, ...]


def as_perm(entries: Iterable[int]) -> Perm:
    """Validate that `entries` is a permutation of [n] and return it as a tuple."""
    p = tuple(int(a) for a in entries)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidInputError(f"{p} is not a permutation of [1..{len(p)}]")
    return p


def parse_perm(text: str) -> Perm:
    """
    Parse comma-separated one-line notation. Whitespace is ignored and the
    empty string is the empty permutation.

    >>> parse_perm("10, 9,5")
    Traceback (most recent call last):
    ...
    nonconsec.errors.InvalidInputError: (10, 9, 5) is not a permutation of [1..3]
    """
    text = "".join(text.split())
    if not text:
        return ()
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InvalidInputError(f"cannot parse permutation {text!r}") from None
    return as_perm(values)


def format_perm(p: Sequence[int]) -> str:
    return ",".join(str(a) for a in p)


@dataclass(frozen=True, order=True)
class Pattern:
    """A permutation of length 2 or 3 used as a forbidden shape."""

    perm: Perm

    def __post_init__(self):
        perm = as_perm(self.perm)
        if len(perm) not in (2, 3):
            raise InvalidInputError(f"patterns must have length 2 or 3, got {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def parse(cls, text: str) -> Pattern:
        """Accept "132" as well as "1,3,2"."""
        text = text.strip()
        if "," in text:
            return cls(parse_perm(text))
        if not text.isdigit():
            raise InvalidInputError(f"cannot parse pattern {text!r}")
        return cls(tuple(int(c) for c in text))

    def __len__(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        return "".join(str(a) for a in self.perm)


P21 = Pattern((2, 1))
P321 = Pattern((3, 2, 1))
P132 = Pattern((1, 3, 2))


def reduce(word: Sequence[int]) -> Perm:
    """
    Replace the smallest entry by 1, the next smallest by 2, and so on.

    >>> reduce((10, 9, 7, 8, 4, 1))
    (6, 5, 3, 4, 2, 1)
    """
    if len(set(word)) != len(word):
        raise InvalidInputError(f"cannot reduce {tuple(word)}: entries repeat")
    rank = {a: r for r, a in enumerate(sorted(word), start=1)}
    return tuple(rank[a] for a in word)


def reverse(p: Sequence[int]) -> Perm:
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> Perm:
    n = len(p)
    return tuple(n + 1 - a for a in p)


def _orbit(perm: Perm) -> set[Perm]:
    orbit = {perm}
    frontier = [perm]
    while frontier:
        q = frontier.pop()
        for image in (reverse(q), complement(q)):
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return orbit


def pattern_orbit(pat: Pattern) -> list[Pattern]:
    """All patterns reachable from `pat` by reverse and complement, sorted."""
    return [Pattern(q) for q in sorted(_orbit(pat.perm))]


def canonical_pattern(pat: Pattern) -> Pattern:
    """
    Lexicographically smallest member of the reverse/complement orbit.

    >>> str(canonical_pattern(Pattern.parse("213")))
    '132'
    """
    return Pattern(min(_orbit(pat.perm)))


# Representatives used in the literature for the three nontrivial orbits of
# patterns of length <= 3. They differ from the lexicographic choice for the
# monotone orbits (21 vs 12, 321 vs 123).
REPRESENTATIVES = (P21, P321, P132)


def representative(pat: Pattern) -> Pattern:
    """The member of {21, 321, 132} in the same orbit as `pat`."""
    orbit = _orbit(pat.perm)
    for rep in REPRESENTATIVES:
        if rep.perm in orbit:
            return rep
    raise AssertionError(f"no representative for {pat}")  # unreachable for k <= 3


def iter_occurrences(p: Sequence[int], pat: Pattern) -> Iterator[Occurrence]:
    """Yield occurrences of `pat` in `p` in lexicographic order of positions."""
    target = pat.perm
    n = len(p)
    if len(target) == 2:
        want_less = target[0] < target[1]
        for i in range(n):
            for j in range(i + 1, n):
                if (p[i] < p[j]) == want_less:
                    yield (i + 1, j + 1)
        return
    x, y, z = target
    xy, xz, yz = x < y, x < z, y < z
    for i in range(n):
        a = p[i]
        for j in range(i + 1, n):
            b = p[j]
            if (a < b) != xy:
                continue
            for m in range(j + 1, n):
                c = p[m]
                if (a < c) == xz and (b < c) == yz:
                    yield (i + 1, j + 1, m + 1)


def occurrences(p: Sequence[int], pat: Pattern) -> list[Occurrence]:
    """All occurrences of `pat` in `p`, as 1-based position tuples."""
    return list(iter_occurrences(p, pat))


def is_consecutive(occ: Occurrence) -> bool:
    return all(b == a + 1 for a, b in zip(occ, occ[1:]))


def avoids_nonconsecutive(p: Sequence[int], pat: Pattern) -> bool:
    """True iff every occurrence of `pat` in `p` sits in adjacent positions."""
    return all(is_consecutive(occ) for occ in iter_occurrences(p, pat))


def contains(p: Sequence[int], pat: Pattern) -> bool:
    return next(iter_occurrences(p, pat), None) is not None


def is_132_avoiding_by_characterization(p: Sequence[int]) -> bool:
    """
    Test 132-avoidance without looking for 132s: for each entry a, the later
    entries smaller than a must be exactly {1, ..., j} for some j.

    >>> is_132_avoiding_by_characterization((6, 5, 3, 4, 2, 1))
    True
    >>> is_132_avoiding_by_characterization((1, 3, 2))
    False
    """
    for i, a in enumerate(p):
        smaller = {b for b in p[i + 1:] if b < a}
        if smaller != set(range(1, len(smaller) + 1)):
            return False
    return True

