"""Cross-method agreement checks shared by the CLI and the test suite."""

from __future__ import annotations

from dataclasses import dataclass, field

from nonconsec import counting, series
from nonconsec.bijections import scattered_subsets, scattered_to_perm
from nonconsec.errors import InvalidInputError
from nonconsec.oracle import (
    DEFAULT_CEILING,
    ClassLabel,
    class_census,
    count_avoiders_bruteforce,
    iter_avoiders,
)
from nonconsec.perm_core import P21, P132, P321

METHODS = ("oracle", "formula", "recurrence", "gf")
PATTERNS = {"21": P21, "321": P321, "132": P132}


def count_by_method(pattern: str, n: int, method: str, ceiling: int = DEFAULT_CEILING) -> int:
    """
    Number of permutations of [n] avoiding nonconsecutive `pattern`.

    ``recurrence`` is the d_n/a_n system for 321 and falls back to the closed
    formula for 21 and 132. 321 has no closed formula.
    """
    if pattern not in PATTERNS:
        raise InvalidInputError(f"unsupported pattern {pattern!r}; choose from 21, 321, 132")
    if method not in METHODS:
        raise InvalidInputError(f"unsupported method {method!r}; choose from {', '.join(METHODS)}")
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    if method == "oracle":
        return count_avoiders_bruteforce(n, PATTERNS[pattern], ceiling)
    if pattern == "321":
        if method == "formula":
            raise InvalidInputError("pattern 321 has no closed formula; use recurrence or gf")
        if method == "recurrence":
            return counting.count_321_recurrence(n)
        return 1 if n == 0 else series.gf_321_coefficients(n)[-1]
    if method == "gf":
        if pattern == "21":
            return series.gf_21_coefficients(n)[-1]
        return series.gf_132_coefficients(n)[-1]
    if pattern == "21":
        return counting.count_21_formula(n)
    return counting.count_132_formula(n)


@dataclass
class Check:
    identity: str
    n: int
    values: dict[str, int]
    passed: bool

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "values": {k: str(v) for k, v in self.values.items()},
            "pass": self.passed,
        }


@dataclass
class Report:
    pattern: str
    max_n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, identity: str, n: int, **values: int) -> None:
        """Record a check that passes when all named values are equal."""
        self.checks.append(Check(identity, n, values, len(set(values.values())) == 1))


def _verify_21(report: Report, max_n: int, ceiling: int) -> None:
    gf = series.gf_21_coefficients(max_n)
    for n in range(max_n + 1):
        avoiders = list(iter_avoiders(n, P21, ceiling))
        report.add(
            "avoiders of nonconsecutive 21 = F(n+1)",
            n,
            oracle=len(avoiders),
            formula=counting.fibonacci(n + 1),
            gf=gf[n],
        )
        images = sorted(scattered_to_perm(n, s) for s in scattered_subsets(1, n - 1, 2))
        report.checks.append(
            Check("adjacent swaps of gap-2 subsets give exactly the avoiders", n,
                  {"subsets": len(images), "avoiders": len(avoiders)}, images == avoiders)
        )


def _verify_321(report: Report, max_n: int, ceiling: int) -> None:
    top = max(max_n, 1)
    d = [None, *counting.d_sequence(top)]
    a_rec = [1, *counting.a_sequence_recurrence(top)]
    a_gf = [1, *series.gf_321_coefficients(top)]
    d_gf = [None, *series.gf_d_coefficients(top)]
    for n in range(max_n + 1):
        census = class_census(n, ceiling)
        size = {str(label): v for label, v in census.items()}
        report.add("avoiders of nonconsecutive 321", n,
                   oracle=size[f"A({n})"], recurrence=a_rec[n], gf=a_gf[n])
        report.add("|C(n)| = Catalan(n)", n, oracle=size[f"C({n})"], formula=counting.catalan(n))
        report.add("|A(n)| = |B(n)| + |D(n)|", n,
                   lhs=size[f"A({n})"], rhs=size[f"B({n})"] + size[f"D({n})"])
        if n >= 1:
            report.add("|D(n)| = d_n", n, oracle=size[f"D({n})"], recurrence=d[n], gf=d_gf[n])
        if n >= 3:
            report.add("|B(n)| = d_(n-2)", n, oracle=size[f"B({n})"], recurrence=d[n - 2])
            report.add("|A(n,1)| = |B(n)|", n, lhs=size[f"A({n},1)"], rhs=size[f"B({n})"])
            report.add("|A(n)| = C_n + sum_k |A(n,k)|", n, lhs=size[f"A({n})"],
                       rhs=counting.catalan(n) + sum(census[ClassLabel("A", n, k)] for k in range(1, n - 1)))
        for k in range(1, n - 1):
            report.add(f"|A(n,{k})| = C_{k} d_(n-{k}-1)", n,
                       oracle=size[f"A({n},{k})"], formula=counting.catalan(k) * d[n - k - 1])


def _verify_132(report: Report, max_n: int, ceiling: int) -> None:
    composed = series.gf_132_coefficients(max_n, "composition")
    closed = series.gf_132_coefficients(max_n, "closed_form")
    for n in range(max_n + 1):
        census = class_census(n, ceiling)
        report.add("avoiders of nonconsecutive 132", n,
                   oracle=census[ClassLabel("E", n)], formula=counting.count_132_formula(n),
                   gf_composition=composed[n], gf_closed_form=closed[n])
        for k in range(n // 3 + 1):
            report.add(f"|E(n,{k})| = binom(n-2k,k) C_(n-2k)", n,
                       oracle=census[ClassLabel("E", n, k)], formula=counting.e_nk_formula(n, k))


def verify(pattern: str, max_n: int, ceiling: int = DEFAULT_CEILING) -> Report:
    """Run every applicable agreement check for sizes 0..max_n."""
    if pattern not in PATTERNS:
        raise InvalidInputError(f"unsupported pattern {pattern!r}; choose from 21, 321, 132")
    if max_n < 0:
        raise InvalidInputError(f"max_n must be nonnegative, got {max_n}")
    report = Report(pattern, max_n)
    {"21": _verify_21, "321": _verify_321, "132": _verify_132}[pattern](report, max_n, ceiling)
    return report

