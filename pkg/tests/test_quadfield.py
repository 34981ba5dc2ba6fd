"""Tests for fundamental units and squarefree testing."""

from math import isqrt

import pytest

from core.contfrac import expand_sqrt
from core.exceptions import CongruenceError, DomainError, MismatchError, NonIntegralError, NotSquarefreeError
from core.fermat_pell import applicability, instantiate
from core.quadfield import (
    cube_root_in_field,
    fundamental_unit,
    is_squarefree,
    require_squarefree,
    unit_from_family,
)
from core.types import FamilyId, FundamentalUnit


class TestSquarefree:
    @pytest.mark.parametrize("n,squarefree,witness", [
        (1, True, None),
        (30, True, None),
        (12, False, 2),
        (18, False, 3),
        (363, False, 11),
        (2147483647 ** 2 * 3, False, 2147483647),
        (282234512826670, True, None),
    ])
    def test_status(self, n, squarefree, witness):
        status = is_squarefree(n)
        assert status.squarefree is squarefree
        assert status.witness == witness

    def test_smallest_witness(self):
        assert is_squarefree(4 * 9 * 25).witness == 2

    def test_non_positive(self):
        with pytest.raises(DomainError):
            is_squarefree(0)

    def test_require(self):
        require_squarefree(22)
        with pytest.raises(NotSquarefreeError) as info:
            require_squarefree(50)
        assert info.value.witness == 5


class TestCubeRoot:
    @pytest.mark.parametrize("P,Q,D,root", [
        (2, 1, 5, (1, 1)),
        (18, 5, 13, (3, 1)),
        (55, 12, 21, (5, 1)),
    ])
    def test_cube_exists(self, P, Q, D, root):
        assert cube_root_in_field(P, Q, D) == root

    def test_not_five_mod_eight(self):
        assert cube_root_in_field(197, 42, 22) is None

    def test_cube_of_half_unit(self):
        # ((5 + sqrt(29))/2)^3 = 70 + 13 sqrt(29)
        assert cube_root_in_field(70, 13, 29) == (5, 1)

    def test_no_cube(self):
        # 6 + sqrt(37) is already fundamental
        assert cube_root_in_field(6, 1, 37) is None

    def test_not_a_unit(self):
        assert cube_root_in_field(3, 1, 5) is None


class TestFundamentalUnit:
    @pytest.mark.parametrize("D,a,b,denom,norm", [
        (2, 1, 1, 1, -1),
        (3, 2, 1, 1, 1),
        (5, 1, 1, 2, -1),
        (13, 3, 1, 2, -1),
        (17, 4, 1, 1, -1),
        (21, 5, 1, 2, 1),
        (22, 197, 42, 1, 1),
        (29, 5, 1, 2, -1),
        (57, 151, 20, 1, 1),
    ])
    def test_known_units(self, D, a, b, denom, norm):
        assert fundamental_unit(D) == FundamentalUnit(D=D, a=a, b=b, denom=denom, norm=norm)

    def test_golden_unit_from_shift_family(self):
        unit = fundamental_unit(282234512826670)
        assert (unit.a, unit.b, unit.norm) == (705593141, 42, 1)
        assert unit.render() == "705593141 + 42*sqrt(D)"

    def test_golden_unit_from_minus_one_family(self):
        unit = fundamental_unit(152100005850000057)
        assert (unit.a, unit.b, unit.denom) == (405600015600000151, 1040000020, 1)

    def test_render_half(self):
        assert fundamental_unit(13).render() == "(3 + 1*sqrt(D))/2"

    @pytest.mark.parametrize("D", [12, 18, 50])
    def test_not_squarefree(self, D):
        with pytest.raises(NotSquarefreeError):
            fundamental_unit(D)

    def test_too_small(self):
        with pytest.raises(DomainError):
            fundamental_unit(1)


class TestUnitFromFamily:
    def test_shift_family_even_t(self):
        unit = unit_from_family("F1", 22, 199998, step=2)
        assert unit.D == 282234512826670
        assert (unit.a, unit.b, unit.norm) == (705593141, 42, 1)

    def test_uncovered_base_still_checked(self):
        unit = unit_from_family("F2", 57, 130000)
        assert unit.D == 152100005850000057
        assert (unit.a, unit.b) == (405600015600000151, 1040000020)

    def test_zero_mod_four_rejected(self):
        # F1 on 22 at t = 1 is 2180 = 0 (mod 4)
        with pytest.raises(CongruenceError):
            unit_from_family("F1", 22, 1)

    def test_not_squarefree_value(self):
        # F1 on 3: f(t) = t^2 + 4t + 3, and f(6) = 63 = 3^2 * 7
        with pytest.raises(NotSquarefreeError):
            unit_from_family("F1", 3, 6)

    def test_negative_t(self):
        with pytest.raises(DomainError):
            unit_from_family("F1", 22, -2)

    def test_covered_mismatch_raises(self, mocker):
        mocker.patch(
            "core.quadfield._unit_from_expansion",
            return_value=FundamentalUnit(D=29822, a=1, b=1, denom=1, norm=1),
        )
        # f(4) = 29822 = 2 * 13 * 31 * 37
        with pytest.raises(MismatchError):
            unit_from_family("F1", 22, 4)


SQUAREFREE = [D for D in range(2, 400) if is_squarefree(D).squarefree]


class TestUnitLaws:
    @pytest.mark.parametrize("D", SQUAREFREE)
    def test_norm_follows_period_parity(self, D):
        unit = fundamental_unit(D)
        assert (unit.norm == 1) == expand_sqrt(D).is_even_period
        assert unit.a ** 2 - D * unit.b ** 2 == unit.norm * unit.denom ** 2

    @pytest.mark.parametrize("D", [D for D in SQUAREFREE if D % 8 == 5])
    def test_half_units_against_search(self, D):
        unit = fundamental_unit(D)
        if unit.b > 3000:
            pytest.skip("unit beyond the search window")
        # smallest b >= 1 with a^2 - D b^2 = +-4 gives the unit (a + b sqrt(D))/2
        for b in range(1, 2 * unit.b + 1):
            found = [a for a in (isqrt(D * b * b + 4), isqrt(D * b * b - 4)) if abs(a * a - D * b * b) == 4]
            if found:
                break
        scale = 1 if unit.denom == 2 else 2
        assert (min(found), b) == (scale * unit.a, scale * unit.b)


def _covered_family_values(f_max, t_max, value_limit):
    """(family, f, t, instance) for covered bases whose f(t) admits a unit read-off."""
    for family_id in FamilyId:
        for f in range(2, f_max + 1):
            if isqrt(f) ** 2 == f or not applicability(family_id, f).covered:
                continue
            try:
                instance = instantiate(family_id, f)
            except NonIntegralError:
                continue
            for t in range(t_max + 1):
                D = instance.f_poly(t)
                if D > value_limit or not (D % 4 in (2, 3) or D % 8 == 1):
                    continue
                if is_squarefree(D).squarefree:
                    yield family_id, f, t, instance


def _assert_unit_matches_family(family_id, f, t, instance):
    unit = unit_from_family(family_id, f, t)
    pair = (instance.X_poly(t), instance.Y_poly(t))
    if unit.norm == 1:
        assert (unit.a, unit.b) == pair
    else:
        assert (unit.a * unit.a + unit.D * unit.b * unit.b, 2 * unit.a * unit.b) == pair
    assert (unit.norm == 1) == expand_sqrt(unit.D).is_even_period
    return unit


class TestOddPeriodUnits:
    def test_odd_period_family_value(self):
        # F4 on 2 at t = 1: f(1) = 82 and 163 + 18 sqrt(82) = (9 + sqrt(82))^2
        unit = unit_from_family("F4", 2, 1)
        assert unit == FundamentalUnit(D=82, a=9, b=1, denom=1, norm=-1)

    def test_minus_one_family_on_odd_base(self):
        instance = instantiate("F2", 10)
        unit = _assert_unit_matches_family(FamilyId.F2, 10, 1, instance)
        assert unit.norm == -1

    def test_covered_small_grid_never_mismatches(self):
        norms = [
            _assert_unit_matches_family(*case).norm
            for case in _covered_family_values(30, 3, 10 ** 20)
        ]
        assert 1 in norms and -1 in norms


@pytest.mark.slow
class TestUnitLawsFullRange:
    """Unit laws over the full reproduction ranges."""

    def test_norm_parity_up_to_2000(self):
        for D in range(2, 2001):
            if not is_squarefree(D).squarefree:
                continue
            unit = fundamental_unit(D)
            assert (unit.norm == 1) == expand_sqrt(D).is_even_period, D

    def test_half_unit_decision_up_to_2000(self):
        window = 20_000
        for D in range(5, 2001, 8):
            if not is_squarefree(D).squarefree:
                continue
            unit = fundamental_unit(D)
            scale = 1 if unit.denom == 2 else 2
            limit = min(scale * unit.b, window)
            first = None
            for b in range(1, limit + 1):
                found = [a for a in (isqrt(D * b * b + 4), isqrt(D * b * b - 4)) if abs(a * a - D * b * b) == 4]
                if found:
                    first = (min(found), b)
                    break
            if scale * unit.b <= window:
                assert first == (scale * unit.a, scale * unit.b), D
            else:
                assert first is None, D

    def test_squarefree_against_sieve_up_to_a_million(self):
        limit = 10 ** 6
        witness = [0] * (limit + 1)
        for p in range(2, isqrt(limit) + 1):
            if all(p % q for q in range(2, isqrt(p) + 1)):
                for multiple in range(p * p, limit + 1, p * p):
                    if witness[multiple] == 0:
                        witness[multiple] = p
        for n in range(1, limit + 1):
            status = is_squarefree(n)
            assert status.squarefree is (witness[n] == 0), n
            assert status.witness == (witness[n] or None), n

    def test_family_units_up_to_200(self):
        # values capped so each factorization stays quick
        count = 0
        for case in _covered_family_values(200, 10, 10 ** 20):
            _assert_unit_matches_family(*case)
            count += 1
        assert count > 0

    def test_shift_family_on_43_even_t(self):
        unit = unit_from_family("F1", 43, 199999, step=2)
        assert unit.D == 45113311649113959
        assert (unit.a, unit.b, unit.norm) == (112783839560, 531, 1)
