"""Weighted complete intersections and their Chern-class invariants.

A model is a numerical presentation only: the general member is assumed
(quasi-)smooth and to miss the singular locus of the ambient weighted
projective space. Intersection numbers are computed in powers of the
ambient hyperplane class h, with h^dim = prod(degrees) / prod(weights).
"""

from dataclasses import dataclass
from math import prod

from exactnum import (
    DEFAULT_ORDER, Rational, linear_factor, series_invert, series_mul,
    series_product,
)

THREEFOLD = 3


class InvalidModelError(ValueError):
    """Weights or degrees are not positive integers."""


class DimensionError(ValueError):
    """The model has the wrong dimension for the requested invariant."""


class NotFanoError(ValueError):
    """-K is not a positive multiple of h."""


class IndexMismatchError(ValueError):
    """A supplied Fano index disagrees with the model."""


class NotCalabiYauError(ValueError):
    """The first Chern class of the model is not zero."""


def _positive_ints(values, label):
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise InvalidModelError(f"{label} must be positive integers, got {v!r}")
        out.append(v)
    return tuple(sorted(out))


@dataclass(frozen=True)
class WciModel:
    """Complete intersection of the given degrees in P(weights).

    Weights and degrees are sorted on construction, so two presentations
    of the same family compare equal.
    """

    weights: tuple
    degrees: tuple = ()

    def __post_init__(self):
        weights = _positive_ints(self.weights, "weights")
        degrees = _positive_ints(self.degrees, "degrees")
        if not weights:
            raise InvalidModelError("an ambient space needs at least one weight")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "degrees", degrees)
        if self.dimension < 1:
            raise DimensionError(
                f"{describe(self)} has dimension {self.dimension}, need at least 1"
            )

    @property
    def dimension(self):
        return len(self.weights) - 1 - len(self.degrees)


@dataclass(frozen=True)
class IntrinsicInvariants:
    index_r: int
    minus_k_cubed: Rational
    euler: Rational
    c2_dot_minus_k: Rational
    chi_structure: Rational


@dataclass(frozen=True)
class CalabiYauInvariants:
    """Invariants of a Calabi-Yau threefold with h11 = 1 (Lefschetz)."""

    h_cubed: Rational
    h_c2: Rational
    h11: int
    h12: Rational
    euler: Rational


def describe(m):
    """Text form `P(w0,...,wn)[d1,...,dc]`."""
    weights = ",".join(str(w) for w in m.weights)
    degrees = ",".join(str(d) for d in m.degrees)
    return f"P({weights})[{degrees}]"


def _require_dimension(m, dim=THREEFOLD):
    if m.dimension != dim:
        raise DimensionError(
            f"{describe(m)} has dimension {m.dimension}, expected {dim}"
        )


def first_chern_degree(m):
    """c1 in units of h: sum(weights) - sum(degrees). Sign decides Fano / CY / general type."""
    return sum(m.weights) - sum(m.degrees)


def fano_index(m):
    """Degree of -K in the hyperplane class."""
    r = first_chern_degree(m)
    if r <= 0:
        raise NotFanoError(f"{describe(m)} is not Fano: -K = {r}h")
    return r


def degree(m):
    """h^dim on the model, any dimension."""
    return Rational(prod(m.degrees), prod(m.weights))


def h_cubed(m):
    _require_dimension(m)
    return degree(m)


def minus_k_cubed(m):
    _require_dimension(m)
    return fano_index(m) ** 3 * h_cubed(m)


def chern_series(m, order=DEFAULT_ORDER):
    """Total Chern class prod(1 + w_j t) / prod(1 + d_i t), truncated.

    From the Euler sequence of the ambient space and the normal bundle
    sequence of the complete intersection.
    """
    if order < 0:
        raise ValueError(f"truncation order must be non-negative, got {order}")
    ambient = series_product((linear_factor(w, order) for w in m.weights), order)
    normal = series_product((linear_factor(d, order) for d in m.degrees), order)
    return series_mul(ambient, series_invert(normal))


def chern_number(m, k):
    """Coefficient of h^k in c_k(T)."""
    return chern_series(m, max(k, 0)).coefficient(k)


def top_chern_number(m):
    """Topological Euler characteristic in any dimension."""
    return chern_number(m, m.dimension) * degree(m)


def euler_characteristic(m):
    _require_dimension(m)
    return top_chern_number(m)


def c2_dot_h(m):
    _require_dimension(m)
    return chern_number(m, 2) * h_cubed(m)


def c2_dot_minus_k(m):
    _require_dimension(m)
    return fano_index(m) * c2_dot_h(m)


def chi_structure_sheaf(m):
    """chi(O) = c1.c2 / 24 on a threefold; equals c2.(-K)/24 for a Fano model."""
    _require_dimension(m)
    series = chern_series(m, THREEFOLD)
    return series.coefficient(1) * series.coefficient(2) * h_cubed(m) / 24


def intrinsic_invariants(m):
    return IntrinsicInvariants(
        index_r=fano_index(m),
        minus_k_cubed=minus_k_cubed(m),
        euler=euler_characteristic(m),
        c2_dot_minus_k=c2_dot_minus_k(m),
        chi_structure=chi_structure_sheaf(m),
    )


def calabi_yau_invariants(m):
    """(H^3, H.c2, h11, h12, e) for a Calabi-Yau threefold model.

    h11 = 1 is taken from the Lefschetz hyperplane theorem and is not
    verified for the model.
    """
    _require_dimension(m)
    c1 = first_chern_degree(m)
    if c1 != 0:
        raise NotCalabiYauError(f"{describe(m)} has c1 = {c1}h, not zero")
    euler = euler_characteristic(m)
    h11 = 1
    return CalabiYauInvariants(
        h_cubed=h_cubed(m),
        h_c2=c2_dot_h(m),
        h11=h11,
        h12=h11 - euler / 2,
        euler=euler,
    )


def etale_cover_model(m, r):
    """Double cover of m branched along a member of |-2K|: adjoin z of weight r and z^2 = f_2r."""
    actual = fano_index(m)
    if r != actual:
        raise IndexMismatchError(
            f"index {r} does not match {describe(m)}, whose index is {actual}"
        )
    return WciModel(m.weights + (r,), m.degrees + (2 * r,))
