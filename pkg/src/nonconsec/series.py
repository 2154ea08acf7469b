"""
Truncated formal power series with exact rational coefficients.

A series of order N carries coefficients of x^0..x^N; anything above x^N is
unknown. Results of binary operations keep the smaller of the two orders.
Coefficients stay `Fraction` internally and are converted to int only at
export, where non-integral values are treated as a bug.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from nonconsec.counting import catalan
from nonconsec.errors import InconsistencyError, SeriesDomainError

DEFAULT_ORDER = 30


@dataclass(frozen=True, init=False)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational | int], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesDomainError(f"order must be nonnegative, got {order}")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise SeriesDomainError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise SeriesDomainError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return series_add(self, other)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return series_add(self, series_scalar(-1, other))

    def __neg__(self) -> PowerSeries:
        return series_scalar(-1, self)

    def __mul__(self, other: PowerSeries | Rational | int) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return series_scalar(other, self)

    __rmul__ = __mul__

    def __truediv__(self, other: PowerSeries) -> PowerSeries:
        return series_div(self, other)

    def __call__(self, inner: PowerSeries) -> PowerSeries:
        return series_compose(self, inner)

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any has a denominator."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise InconsistencyError(f"coefficient of x^{i} is {c}, expected an integer")
            out.append(c.numerator)
        return out

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs)
        return f"PowerSeries([{shown}], order={self.order})"


def polynomial(coeffs: Sequence[Rational | int], order: int) -> PowerSeries:
    """A polynomial viewed as a series of the given order (extra terms dropped)."""
    return PowerSeries(coeffs, order=order)


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(a[i] + b[i] for i in range(n + 1))


def series_scalar(c: Rational | int, a: PowerSeries) -> PowerSeries:
    c = Fraction(c)
    return PowerSeries(c * x for x in a.coeffs)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(sum(a[i] * b[m - i] for i in range(m + 1)) for m in range(n + 1))


def series_div(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """q with q * den == num through the common order; den(0) must be nonzero."""
    if den[0] == 0:
        raise SeriesDomainError("division by a series with zero constant term")
    n = min(num.order, den.order)
    inv0 = 1 / den[0]
    q: list[Fraction] = []
    for m in range(n + 1):
        acc = num[m] - sum(q[i] * den[m - i] for i in range(m))
        q.append(acc * inv0)
    return PowerSeries(q)


def series_sqrt(s: PowerSeries) -> PowerSeries:
    """
    The square root with constant term 1, by solving r*r = s term by term:
    2 r_m = s_m - sum_{i=1}^{m-1} r_i r_{m-i}.
    """
    if s[0] != 1:
        raise SeriesDomainError(f"sqrt needs constant term 1, got {s[0]}")
    r = [Fraction(1)]
    for m in range(1, s.order + 1):
        acc = s[m] - sum(r[i] * r[m - i] for i in range(1, m))
        r.append(acc / 2)
    return PowerSeries(r)


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(x)) by Horner's rule; inner must vanish at 0."""
    if inner[0] != 0:
        raise SeriesDomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = PowerSeries([outer[n]], order=n)
    for i in range(n - 1, -1, -1):
        acc = series_mul(acc, inner)
        acc = PowerSeries([acc[0] + outer[i], *acc.coeffs[1:]])
    return acc


def shift_down(s: PowerSeries, by: int = 1) -> PowerSeries:
    """Divide by x**by; the dropped low coefficients must be zero."""
    low = s.coeffs[:by]
    if any(c != 0 for c in low):
        raise InconsistencyError(f"cannot divide by x^{by}: low coefficients {low} do not vanish")
    if s.order < by:
        raise SeriesDomainError(f"series of order {s.order} has nothing left after dividing by x^{by}")
    return PowerSeries(s.coeffs[by:])


def x_series(order: int) -> PowerSeries:
    return polynomial([0, 1], order)


def catalan_series(order: int) -> PowerSeries:
    """C(x) = sum C_n x^n, seeded from the closed-form Catalan numbers."""
    return PowerSeries(catalan(m) for m in range(order + 1))


def catalan_series_from_sqrt(order: int) -> PowerSeries:
    """C(x) = (1 - sqrt(1 - 4x)) / (2x), computed through `series_sqrt`."""
    root = series_sqrt(polynomial([1, -4], order + 1))
    return series_scalar(Fraction(1, 2), shift_down(polynomial([1], order + 1) - root))


def catalan_star_series(order: int) -> PowerSeries:
    """C*(x): the Catalan series with C_0 removed."""
    c = catalan_series(order)
    return PowerSeries([0, *c.coeffs[1:]])


def d_series(order: int) -> PowerSeries:
    """D(x) = C*(x) / (1 + x^2 - x C*(x))."""
    cstar = catalan_star_series(order)
    den = polynomial([1, 0, 1], order) - x_series(order) * cstar
    return cstar / den


def a_series(order: int) -> PowerSeries:
    """sum_{n>=1} a_n x^n = C*(x) / (1 - (x / (1 + x^2)) C*(x))."""
    cstar = catalan_star_series(order)
    weight = x_series(order) / polynomial([1, 0, 1], order)
    return cstar / (polynomial([1], order) - weight * cstar)


def gf_d_coefficients(n: int) -> list[int]:
    """d_1..d_n read off D(x)."""
    if n < 1:
        raise SeriesDomainError(f"need at least one coefficient, got {n}")
    return d_series(n).integer_coefficients()[1:]


def gf_321_coefficients(n: int) -> list[int]:
    """a_1..a_n read off the generating function for nonconsecutive-321 avoiders."""
    if n < 1:
        raise SeriesDomainError(f"need at least one coefficient, got {n}")
    return a_series(n).integer_coefficients()[1:]


def gf_132_coefficients(n: int, method: str = "composition") -> list[int]:
    """
    e_0..e_n for nonconsecutive-132 avoiders.

    ``composition`` evaluates C(x + x^3); ``closed_form`` evaluates
    (1 - sqrt(1 - 4x - 4x^3)) / (2(x + x^3)), dividing out the factor x
    exactly before the remaining division by 2(1 + x^2).
    """
    if n < 0:
        raise SeriesDomainError(f"order must be nonnegative, got {n}")
    if method == "composition":
        result = series_compose(catalan_series(n), polynomial([0, 1, 0, 1], n))
    elif method == "closed_form":
        m = n + 1
        numerator = polynomial([1], m) - series_sqrt(polynomial([1, -4, 0, -4], m))
        result = shift_down(numerator) / polynomial([2, 0, 2], n)
    else:
        raise SeriesDomainError(f"unknown method {method!r}; use 'composition' or 'closed_form'")
    return result.integer_coefficients()


def gf_21_coefficients(n: int) -> list[int]:
    """F_1..F_{n+1}, i.e. counts for sizes 0..n, from 1 / (1 - x - x^2)."""
    if n < 0:
        raise SeriesDomainError(f"order must be nonnegative, got {n}")
    return (polynomial([1], n) / polynomial([1, -1, -1], n)).integer_coefficients()
