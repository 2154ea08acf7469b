"""
Exit criteria. Every comparison is exact (integers or Fractions); there is
no numerical tolerance anywhere. Run with ``pytest tests/test_acceptance.py``
for a PASS/FAIL line per criterion in the terminal summary, or directly with
``python tests/test_acceptance.py``.
"""

import random
from fractions import Fraction
from itertools import permutations

from nonconsec.bijections import (
    b_to_d,
    compose_132,
    compose_132_states,
    d_to_b,
    decompose_132,
    perm_to_scattered,
    scattered_subsets,
    scattered_to_perm,
    split_321,
    unsplit_321,
)
from nonconsec.counting import (
    a_sequence_recurrence,
    binomial,
    catalan,
    count_132_formula,
    d_sequence,
    fibonacci,
)
from nonconsec.oracle import class_census, count_avoiders_bruteforce, enumerate_class, iter_avoiders
from nonconsec.perm_core import P21, P132, P321, Pattern, avoids_nonconsecutive, complement, reverse
from nonconsec.series import (
    PowerSeries,
    catalan_series,
    catalan_series_from_sqrt,
    gf_132_coefficients,
    gf_321_coefficients,
    polynomial,
    series_compose,
    series_div,
    series_mul,
    series_sqrt,
)

SEQ_321 = [1, 2, 6, 18, 56, 182, 607, 2064]  # a_1..a_8
SEQ_132 = [1, 1, 2, 6, 18, 57, 190, 654, 2306]  # e_0..e_8
WORKED_PERM = (10, 9, 5, 7, 6, 8, 2, 4, 3, 1)


def test_criterion_1_fibonacci_counts_21_avoiders():
    oracle = [count_avoiders_bruteforce(n, P21) for n in range(1, 10)]
    assert oracle == [1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert oracle == [fibonacci(n + 1) for n in range(1, 10)]


def test_criterion_2_321_sequence_three_ways():
    oracle = [count_avoiders_bruteforce(n, P321) for n in range(1, 9)]
    recurrence = a_sequence_recurrence(30)
    gf = gf_321_coefficients(30)
    assert oracle == SEQ_321
    assert recurrence[:8] == SEQ_321
    assert gf[:8] == SEQ_321
    assert recurrence == gf


def test_criterion_3_132_sequence_four_ways():
    oracle = [count_avoiders_bruteforce(n, P132) for n in range(9)]
    formula = [count_132_formula(n) for n in range(31)]
    composed = gf_132_coefficients(30, "composition")
    closed = gf_132_coefficients(30, "closed_form")
    assert oracle == SEQ_132
    assert formula[:9] == SEQ_132
    assert formula == composed == closed


def test_criterion_4_class_identities():
    d = [None, *d_sequence(9)]
    sizes = {}
    for n in range(10):
        sizes.update({str(label): v for label, v in class_census(n).items()})
    c = sizes
    for n in range(10):
        assert c[f"A({n})"] == c[f"B({n})"] + c[f"D({n})"]
        if n >= 3:
            assert c[f"B({n})"] == c[f"D({n - 2})"] == d[n - 2]
        for k in range(1, n - 1):
            assert c[f"A({n},{k})"] == catalan(k) * d[n - k - 1]
        for k in range(n // 3 + 1):
            assert c[f"E({n},{k})"] == binomial(n - 2 * k, k) * catalan(n - 2 * k)


def test_criterion_4b_b_equals_shifted_d_by_enumeration():
    for n in range(3, 10):
        assert len(enumerate_class(f"B({n})")) == len(enumerate_class(f"D({n - 2})"))


def test_criterion_5_bijection_round_trips():
    for n in range(10):
        # swap21
        subsets = scattered_subsets(1, n - 1, 2)
        avoiders = list(iter_avoiders(n, P21))
        assert sorted(scattered_to_perm(n, s) for s in subsets) == avoiders
        assert all(scattered_to_perm(n, perm_to_scattered(p)) == p for p in avoiders)
        assert all(perm_to_scattered(scattered_to_perm(n, s)) == s for s in subsets)

        # b-to-d / d-to-b
        if n >= 3:
            b, dd = enumerate_class(f"B({n})"), enumerate_class(f"D({n - 2})")
            assert sorted(map(b_to_d, b)) == dd
            assert sorted(map(d_to_b, dd)) == b
            assert all(d_to_b(b_to_d(p)) == p for p in b)
            assert all(b_to_d(d_to_b(q)) == q for q in dd)

        # decompose132 / compose132
        for k in range(n // 3 + 1):
            domain = enumerate_class(f"E({n},{k})")
            rest = enumerate_class(f"E({n - 2 * k},0)")
            sets = [s for s in scattered_subsets(2, n - 1, 3) if len(s) == k]
            assert {decompose_132(p) for p in domain} == {(s, q) for s in sets for q in rest}
            assert all(compose_132(n, *decompose_132(p)) == p for p in domain)
            assert all(decompose_132(compose_132(n, s, q)) == (s, q) for s in sets for q in rest)

    # split321 / unsplit321
    for n in range(4, 9):
        for k in range(2, n - 1):
            domain = enumerate_class(f"A({n},{k})")
            codomain = {(s, t) for s in enumerate_class(f"C({k})")
                        for t in enumerate_class(f"B({n - k + 1})")}
            assert {(sp.sigma, sp.tau) for sp in map(split_321, domain)} == codomain
            assert all(unsplit_321(*_pair(split_321(p))) == p for p in domain)
            assert all(_pair(split_321(unsplit_321(s, t))) == (s, t) for s, t in codomain)


def _pair(sp):
    return sp.sigma, sp.tau


def test_criterion_6_worked_example():
    s, q = decompose_132(WORKED_PERM)
    assert (s.elements, q) == ((4, 8), (6, 5, 3, 4, 2, 1))
    states = compose_132_states(10, s, q)
    assert states[0] == (6, 5, None, 3, None, 4, None, 2, None, 1)
    assert states[1] == (8, 7, 3, 5, 4, 6, None, 2, None, 1)
    assert states[-1] == WORKED_PERM == compose_132(10, s, q)


def _random_series(rng, order, constant=None):
    coeffs = [Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(order + 1)]
    if constant is not None:
        coeffs[0] = Fraction(constant)
    return PowerSeries(coeffs)


def _naive_substitute(poly, inner, order):
    result = [Fraction(0)] * (len(poly) * len(inner) + 1)
    power = [Fraction(1)]
    for a in poly:
        for i, c in enumerate(power):
            result[i] += a * c
        power = [sum(power[i] * inner[m - i] for i in range(len(power)) if 0 <= m - i < len(inner))
                 for m in range(len(power) + len(inner) - 1)]
    return PowerSeries(result, order=order)


def test_criterion_7_series_engine():
    rng = random.Random(20061101)
    for _ in range(200):
        order = rng.randint(0, 32)
        num = _random_series(rng, order)
        den = _random_series(rng, order, constant=rng.choice([1, -2, Fraction(3, 5)]))
        assert series_mul(series_div(num, den), den) == num
        s = _random_series(rng, order, constant=1)
        r = series_sqrt(s)
        assert series_mul(r, r) == s
        deg, inner_deg = rng.randint(0, 8), rng.randint(1, 8)
        outer_poly = [Fraction(rng.randint(-9, 9)) for _ in range(deg + 1)]
        inner_poly = [Fraction(0)] + [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(inner_deg)]
        got = series_compose(polynomial(outer_poly, order), polynomial(inner_poly, order))
        assert got == _naive_substitute(outer_poly, inner_poly, order)
    assert catalan_series_from_sqrt(30) == catalan_series(30)
    assert catalan_series(30).integer_coefficients() == [catalan(m) for m in range(31)]


def test_criterion_8_symmetry():
    for n in range(8):
        for p in permutations(range(1, n + 1)):
            for pat in (P21, P321, P132):
                a = avoids_nonconsecutive(p, pat)
                assert a == avoids_nonconsecutive(reverse(p), Pattern(reverse(pat.perm)))
                assert a == avoids_nonconsecutive(complement(p), Pattern(complement(pat.perm)))


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
                print(f"PASS  {name}")
            except AssertionError as exc:
                failures += 1
                print(f"FAIL  {name}: {exc}")
    sys.exit(1 if failures else 0)
