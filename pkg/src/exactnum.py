"""Exact rational arithmetic and truncated power series in one variable."""

from dataclasses import dataclass
from fractions import Fraction

# Every intermediate value is an exact, always-reduced fraction.
Rational = Fraction

DEFAULT_ORDER = 3


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


class NonUnitError(ValueError):
    """A series with zero constant term has no inverse."""


def rational_text(q):
    """Render a rational as `n` or `n/d`; never a decimal point."""
    q = Rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integral(q):
    return Rational(q).denominator == 1


@dataclass(frozen=True)
class TruncSeries:
    """Power series in t, truncated after t^order.

    Coefficient i holds the coefficient of t^i. Trailing zeros are stored
    explicitly so that equality is structural.
    """

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least a constant term")
        object.__setattr__(
            self, "coefficients", tuple(Rational(c) for c in self.coefficients)
        )

    @classmethod
    def of(cls, coefficients, order=DEFAULT_ORDER):
        """Build a series of the given order, padding with zeros or truncating."""
        if order < 0:
            raise ValueError(f"truncation order must be non-negative, got {order}")
        coeffs = list(coefficients)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def unit(cls, order=DEFAULT_ORDER):
        return cls.of([1], order)

    @property
    def truncation_order(self):
        return len(self.coefficients) - 1

    def coefficient(self, k):
        """Coefficient of t^k, zero beyond the truncation order."""
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        if k > self.truncation_order:
            return Rational(0)
        return self.coefficients[k]

    def truncate(self, order):
        return TruncSeries.of(self.coefficients, order)

    def scale(self, c):
        c = Rational(c)
        return TruncSeries(tuple(c * a for a in self.coefficients))

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if i == 0:
                terms.append(rational_text(c))
            elif i == 1:
                terms.append(f"{rational_text(c)}*t")
            else:
                terms.append(f"{rational_text(c)}*t^{i}")
        return " + ".join(terms)


def _check_orders(a, b):
    if a.truncation_order != b.truncation_order:
        raise OrderMismatchError(
            f"truncation orders differ: {a.truncation_order} vs {b.truncation_order}"
        )


def series_add(a, b):
    """Coefficientwise sum of two series of equal order."""
    _check_orders(a, b)
    return TruncSeries(tuple(x + y for x, y in zip(a.coefficients, b.coefficients)))


def series_sub(a, b):
    _check_orders(a, b)
    return TruncSeries(tuple(x - y for x, y in zip(a.coefficients, b.coefficients)))


def series_mul(a, b):
    """Cauchy product of two series of equal order, truncated at that order."""
    _check_orders(a, b)
    n = a.truncation_order
    out = [Rational(0)] * (n + 1)
    for i, x in enumerate(a.coefficients):
        if x == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += x * b.coefficients[j]
    return TruncSeries(tuple(out))


def series_invert(a):
    """Multiplicative inverse of a series with non-zero constant term."""
    a0 = a.coefficients[0]
    if a0 == 0:
        raise NonUnitError(f"constant term is zero, cannot invert {a}")
    n = a.truncation_order
    inv = [Rational(0)] * (n + 1)
    inv[0] = 1 / a0
    # b_k = -(a_1 b_{k-1} + ... + a_k b_0) / a_0
    for k in range(1, n + 1):
        acc = sum(a.coefficients[i] * inv[k - i] for i in range(1, k + 1))
        inv[k] = -acc / a0
    return TruncSeries(tuple(inv))


def linear_factor(w, order=DEFAULT_ORDER):
    """The series 1 + w*t truncated at the given order."""
    if order < 0:
        raise ValueError(f"truncation order must be non-negative, got {order}")
    return TruncSeries.of([1, w], order)


def series_product(factors, order=DEFAULT_ORDER):
    """Product of an iterable of series; the unit series when empty."""
    result = TruncSeries.unit(order)
    for f in factors:
        result = series_mul(result, f)
    return result
