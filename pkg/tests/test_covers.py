"""Tests for covers.py: quotient and Calabi-Yau cover invariants."""

import logging
import random
from types import SimpleNamespace

import pytest

from covers import (
    AmbiguousFactorError, CoverInvariants, FanoInput, InvalidFanoInputError,
    NoAdmissibleFactorError,
    UnsupportedPicardRankError, admissible_l_factors, chi_riemann_roch,
    cover_invariants, euler_cover, euler_cover_via_quotient,
    euler_enriques_surface, euler_enriques_surface_cover, euler_quotient,
    pullback_h_c2, pullback_h_c2_via_adjunction, quotient_h_cubed,
)
from exactnum import Rational, is_integral
from varieties import c2_dot_minus_k, etale_cover_model, euler_characteristic, fano_index

CASES = 1000


# ── FanoInput ─────────────────────────────────────────────────────

class TestFanoInput:

    @pytest.mark.parametrize("kwargs", [
        dict(euler_x=0, k3=0, index_r=1),
        dict(euler_x=0, k3=-8, index_r=1),
        dict(euler_x=0, k3=12, index_r=2),
        dict(euler_x=0, k3=8, index_r=0),
        dict(euler_x=0, k3=8, index_r=1, h2_x=0),
        dict(euler_x=0.0, k3=8, index_r=1),
    ])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(InvalidFanoInputError):
            FanoInput(**kwargs)


# ── Euler characteristics ─────────────────────────────────────────

class TestEulerCharacteristics:

    def test_euler_cover(self, x2_input, x4_input):
        assert euler_cover(x2_input) == -64
        assert euler_cover(x4_input) == -88

    def test_euler_cover_degenerate(self):
        # formula only; k3 = 0 is not a valid FanoInput
        assert euler_cover(SimpleNamespace(euler_x=24, k3=0)) == 0

    def test_surface_cover(self, x1_input, x4_input):
        assert euler_enriques_surface_cover(x1_input) == 64
        assert euler_enriques_surface_cover(x4_input) == 176

    def test_surface(self, x1_input, x2_input):
        assert euler_enriques_surface(x1_input) == 32
        assert euler_enriques_surface(x2_input) == 40

    def test_quotient(self, x1_input, x4_input):
        assert euler_quotient(x4_input) == 4
        assert euler_quotient(x1_input) == -24
        assert euler_quotient(FanoInput(euler_x=-8, k3=1, index_r=1)) == 0

    def test_via_quotient(self, x1_input, x2_input, x3_input):
        assert euler_cover_via_quotient(x1_input) == -88
        assert euler_cover_via_quotient(x2_input) == -64
        assert euler_cover_via_quotient(x3_input) == -72

    def test_two_paths_agree_on_families(self, all_inputs):
        for f in all_inputs.values():
            assert euler_cover(f) == euler_cover_via_quotient(f)

    def test_two_paths_agree_randomized(self):
        rng = random.Random(2012)
        for _ in range(CASES):
            f = FanoInput(
                euler_x=rng.randint(-10 ** 6, 10 ** 6),
                k3=rng.randint(1, 10 ** 6),
                index_r=1,
            )
            assert euler_cover(f) == euler_cover_via_quotient(f)

    def test_surface_term_matches_series_path(self, x1_model, x1_input):
        # e(S_X) = c2.(-2K) + 4(-K)^3 with c2.(-K) taken from the Chern series
        assert euler_enriques_surface_cover(x1_input) == 2 * c2_dot_minus_k(x1_model) + 16


# ── H.c2 and Riemann-Roch ─────────────────────────────────────────

class TestPullbackAndRiemannRoch:

    def test_pullback_h_c2(self, x1_input, x2_input):
        assert pullback_h_c2(x1_input) == 28
        assert pullback_h_c2(x2_input) == 32

    def test_adjunction_path_agrees(self, all_inputs):
        for f in all_inputs.values():
            assert pullback_h_c2_via_adjunction(f) == pullback_h_c2(f)

    def test_quotient_h_cubed(self, x1_input, x3_input):
        assert quotient_h_cubed(x1_input) == 2
        assert quotient_h_cubed(x3_input) == 8

    @pytest.mark.parametrize("h3,hc2,expected", [
        (8, 32, Rational(4)),
        (0, 0, Rational(0)),
        (1, 16, Rational(3, 2)),
    ])
    def test_chi(self, h3, hc2, expected):
        assert chi_riemann_roch(h3, hc2) == expected

    def test_chi_closed_form_for_x2(self):
        # chi(Y, H) for X2 with factor l is (4 + 8 l^2) / (3 l^3)
        for l in range(1, 6):
            got = chi_riemann_roch(Rational(8, l ** 3), Rational(32, l))
            assert got == Rational(4 + 8 * l ** 2, 3 * l ** 3)

    def test_chi_multiple(self):
        assert chi_riemann_roch(5, 50, n=2) == Rational(8 * 5, 6) + Rational(100, 12)


# ── Divisibility factor ───────────────────────────────────────────

class TestAdmissibleFactors:

    def test_all_families_force_one(self, all_inputs):
        for f in all_inputs.values():
            assert admissible_l_factors(f) == [1]

    def test_x2_rejects_two_on_riemann_roch(self, x2_input, caplog):
        assert not is_integral(chi_riemann_roch(1, 16))
        with caplog.at_level(logging.DEBUG, logger="covers"):
            admissible_l_factors(x2_input)
        assert "l=2 rejected: chi" in caplog.text

    def test_ambiguous_input(self):
        # l = 2 gives H^3 = 2, H.c2 = 20, chi = 2: all integral
        f = FanoInput(euler_x=0, k3=16, index_r=1)
        assert admissible_l_factors(f) == [1, 2]
        with pytest.raises(AmbiguousFactorError) as excinfo:
            cover_invariants(f)
        assert excinfo.value.candidates == [1, 2]

    def test_no_admissible_factor(self, caplog):
        # r = 3 leaves only l = 1: H^3 = 1, H.c2 = 17, chi = 19/12
        f = FanoInput(euler_x=0, k3=27, index_r=3)
        with caplog.at_level(logging.DEBUG, logger="covers"):
            with pytest.raises(NoAdmissibleFactorError, match="r = 3"):
                admissible_l_factors(f)
        assert "l=1 rejected: chi" in caplog.text
        with pytest.raises(NoAdmissibleFactorError):
            cover_invariants(f)


# ── cover_invariants ──────────────────────────────────────────────

class TestCoverInvariants:

    @pytest.mark.parametrize("name,expected", [
        ("X1", (4, 28, 1, 45)),
        ("X2", (8, 32, 1, 33)),
        ("X3", (2, 20, 1, 37)),
        ("X4", (4, 28, 1, 45)),
    ])
    def test_table_rows(self, name, expected, all_inputs):
        assert cover_invariants(all_inputs[name]).table_row() == expected

    def test_hodge_relation_and_integrality(self, all_inputs):
        for f in all_inputs.values():
            inv = cover_invariants(f)
            assert inv.euler_y == 2 * (inv.h11 - inv.h12)
            assert inv.euler_y % 2 == 0
            assert inv.chi_h == chi_riemann_roch(inv.h_y_cubed, inv.h_c2)
            assert inv.l_factor == 1

    def test_divisibility_contract(self, all_inputs):
        for f in all_inputs.values():
            inv = cover_invariants(f)
            assert inv.h_c2 * f.index_r == pullback_h_c2(f)
            assert inv.h_y_cubed * f.index_r ** 3 == f.k3

    def test_proof_intermediates(self, x1_input):
        inv = cover_invariants(x1_input)
        assert (inv.euler_w, inv.euler_s, inv.euler_sx) == (-24, 32, 64)
        assert inv.chi_h == 3

    def test_x1_x4_overlap(self, x1_input, x4_input):
        assert cover_invariants(x1_input).table_row() == cover_invariants(x4_input).table_row()

    def test_hodge_diamond(self, x3_input):
        diamond = cover_invariants(x3_input).hodge_diamond()
        assert diamond[3] == [1, 37, 37, 1]
        assert diamond[2] == diamond[4] == [0, 1, 0]

    def test_picard_sandwich(self, all_inputs):
        for f in all_inputs.values():
            h2_w, h2_y, h2_x = cover_invariants(f).picard_sandwich
            assert 1 <= h2_w <= h2_y <= h2_x == f.h2_x == 1

    def test_picard_rank_above_one(self):
        with pytest.raises(UnsupportedPicardRankError):
            cover_invariants(FanoInput(euler_x=-56, k3=4, index_r=1, h2_x=2))

    def test_odd_euler_rejected(self):
        with pytest.raises(InvalidFanoInputError):
            cover_invariants(FanoInput(euler_x=-55, k3=4, index_r=1))

    def test_hodge_relation_enforced(self):
        with pytest.raises(ValueError):
            CoverInvariants(
                euler_y=-88, h_y_cubed=4, h_c2=28, h11=1, h12=44, l_factor=1,
                chi_h=3, euler_w=Rational(-24), euler_s=Rational(32),
                euler_sx=Rational(64),
            )


# ── Etale cross-validation ────────────────────────────────────────

class TestEtaleConsistency:

    @pytest.mark.parametrize("model_name,input_name,expected", [
        ("x1_model", "X1", -176),
        ("x2_model", "X2", -128),
        ("x3_model", "X3", -144),
        ("x4_model", "X4", -176),
    ])
    def test_series_path_matches_formula(self, model_name, input_name, expected,
                                         all_inputs, request):
        m = request.getfixturevalue(model_name)
        cover = etale_cover_model(m, fano_index(m))
        assert euler_characteristic(cover) == expected
        assert euler_characteristic(cover) == 2 * euler_cover(all_inputs[input_name])
