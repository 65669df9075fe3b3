"""Invariants of the Fano-Enriques quotient W and its Calabi-Yau double cover Y.

X is a smooth Fano threefold doubly covering W, branched at eight points.
Y is the Calabi-Yau threefold doubly covering W, branched along a smooth
member S of |-2K_W| and the eight points. All formulas take only the
numerical data of X as input.
"""

import logging
from dataclasses import dataclass

from exactnum import Rational, is_integral

logger = logging.getLogger(__name__)

# chi(O_X) = 1 for a Fano threefold, so c2(X).(-K_X) = 24 by Riemann-Roch.
C2_DOT_MINUS_K = 24
# Singular points of W, all of type 1/2(1,1,1).
QUOTIENT_SINGULARITIES = 8


class InvalidFanoInputError(ValueError):
    pass


class NoAdmissibleFactorError(ValueError):
    """No divisibility factor l gives integral invariants for Y."""


class UnsupportedPicardRankError(ValueError):
    pass


class AmbiguousFactorError(ValueError):
    """More than one divisibility factor survives the integrality filter."""

    def __init__(self, candidates):
        self.candidates = list(candidates)
        super().__init__(
            f"divisibility factor is not determined: candidates {self.candidates}"
        )


def _plain_int(value, label):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidFanoInputError(f"{label} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class FanoInput:
    euler_x: int
    k3: int
    index_r: int
    h2_x: int = 1

    def __post_init__(self):
        for label in ("euler_x", "k3", "index_r", "h2_x"):
            _plain_int(getattr(self, label), label)
        if self.index_r <= 0:
            raise InvalidFanoInputError(f"index must be positive, got {self.index_r}")
        if self.h2_x <= 0:
            raise InvalidFanoInputError(f"h2(X) must be positive, got {self.h2_x}")
        if self.k3 <= 0:
            raise InvalidFanoInputError(f"(-K)^3 must be positive, got {self.k3}")
        if self.k3 % self.index_r ** 3:
            raise InvalidFanoInputError(
                f"(-K)^3 = {self.k3} is not divisible by r^3 = {self.index_r ** 3}"
            )


@dataclass(frozen=True)
class CoverInvariants:
    euler_y: int
    h_y_cubed: int
    h_c2: int
    h11: int
    h12: int
    l_factor: int
    chi_h: int
    euler_w: Rational
    euler_s: Rational
    euler_sx: Rational
    # (h2(W), h2(Y), h2(X)) from 1 <= h2(W) <= h2(Y) <= h2(X) = 1
    picard_sandwich: tuple = (1, 1, 1)

    def __post_init__(self):
        if self.euler_y != 2 * (self.h11 - self.h12):
            raise ValueError(
                f"e(Y) = {self.euler_y} violates e = 2(h11 - h12) "
                f"with h11 = {self.h11}, h12 = {self.h12}"
            )

    def table_row(self):
        return (self.h_y_cubed, self.h_c2, self.h11, self.h12)

    def hodge_diamond(self):
        """Rows h^{p,q} for p + q = 0..6 of a Calabi-Yau threefold."""
        h11, h12 = self.h11, self.h12
        return [
            [1],
            [0, 0],
            [0, h11, 0],
            [1, h12, h12, 1],
            [0, h11, 0],
            [0, 0],
            [1],
        ]


def euler_cover(f):
    """e(Y) = e(X) - 24 - 2(-K_X)^3."""
    return f.euler_x - C2_DOT_MINUS_K - 2 * f.k3


def euler_enriques_surface_cover(f):
    """e(S_X) for S_X in |-2K_X|, by adjunction: c2.(-2K) + 4(-K)^3."""
    return Rational(2 * C2_DOT_MINUS_K + 4 * f.k3)


def euler_enriques_surface(f):
    """S_X -> S is an unramified double cover."""
    return euler_enriques_surface_cover(f) / 2


def euler_quotient(f):
    """e(W) from e(X) = 2e(W) - 8."""
    return Rational(f.euler_x + QUOTIENT_SINGULARITIES, 2)


def euler_cover_via_quotient(f):
    """e(Y) = 2e(W) - e(S) - 8, the second path to the same number."""
    return 2 * euler_quotient(f) - euler_enriques_surface(f) - QUOTIENT_SINGULARITIES


def quotient_h_cubed(f):
    """H_W^3, since phi*(H_W) = -K_X and phi has degree two."""
    return Rational(f.k3, 2)


def pullback_h_c2(f):
    """psi*(H_W).c2(Y) = (-K_X)^3 + 24."""
    return f.k3 + C2_DOT_MINUS_K


def pullback_h_c2_via_adjunction(f):
    """psi*(H_W).c2(Y) by adjunction on S_Y: -(-K_X)^3 + e(S_X)/2."""
    return -f.k3 + euler_enriques_surface_cover(f) / 2


def chi_riemann_roch(h3, hc2, n=1):
    """chi(Y, nH) = n^3 H^3 / 6 + n H.c2 / 12 on a Calabi-Yau threefold."""
    return Rational(n) ** 3 * Rational(h3) / 6 + n * Rational(hc2) / 12


def admissible_l_factors(f):
    """Factors l with k = l*r for which H_Y^3, H_Y.c2 and chi(Y, H_Y) are integers."""
    r = f.index_r
    base = f.k3 // r ** 3
    hc2_total = pullback_h_c2(f)
    factors = []
    l = 1
    while l ** 3 <= base:
        h3 = Rational(base, l ** 3)
        hc2 = Rational(hc2_total, r * l)
        if not is_integral(h3):
            logger.debug("l=%d rejected: H^3 = %s is not an integer", l, h3)
        elif not is_integral(hc2):
            logger.debug("l=%d rejected: H.c2 = %s is not an integer", l, hc2)
        elif not is_integral(chi_riemann_roch(h3, hc2)):
            logger.debug(
                "l=%d rejected: chi(Y, H) = %s is not an integer",
                l, chi_riemann_roch(h3, hc2),
            )
        else:
            factors.append(l)
        l += 1
    if not factors:
        raise NoAdmissibleFactorError(
            f"no divisibility factor is admissible for (-K)^3 = {f.k3}, r = {r}"
        )
    return factors


def cover_invariants(f):
    """Full invariant tuple of Y when X has Picard number one."""
    if f.h2_x != 1:
        raise UnsupportedPicardRankError(
            f"Hodge numbers are only determined for h2(X) = 1, got {f.h2_x}"
        )
    factors = admissible_l_factors(f)
    if factors != [1]:
        raise AmbiguousFactorError(factors)

    r = f.index_r
    euler_y = euler_cover(f)
    if euler_y % 2:
        raise InvalidFanoInputError(
            f"e(Y) = {euler_y} is odd; e(X) = {f.euler_x} cannot come from a Fano threefold"
        )
    h_y_cubed = f.k3 // r ** 3
    h_c2 = pullback_h_c2(f) // r
    h11 = 1
    return CoverInvariants(
        euler_y=euler_y,
        h_y_cubed=h_y_cubed,
        h_c2=h_c2,
        h11=h11,
        h12=h11 - euler_y // 2,
        l_factor=1,
        chi_h=int(chi_riemann_roch(h_y_cubed, h_c2)),
        euler_w=euler_quotient(f),
        euler_s=euler_enriques_surface(f),
        euler_sx=euler_enriques_surface_cover(f),
    )
