"""Tests for continued fraction expansion, convergents and their identities."""

from fractions import Fraction

import pytest

from core.contfrac import (
    ConvergentTable,
    convergents,
    expand_sqrt,
    has_special_middle,
    identity_report,
    middle_quotient_in_range,
    numerators,
    reversed_value,
)
from core.exceptions import DomainError, PerfectSquareError
from tests.conftest import KNOWN_EXPANSIONS


class TestExpandSqrt:
    @pytest.mark.parametrize("f,a0,period", KNOWN_EXPANSIONS)
    def test_known_expansions(self, f, a0, period):
        expansion = expand_sqrt(f)
        assert expansion.a0 == a0
        assert expansion.period == period
        assert expansion.recovers_root()

    def test_render(self):
        assert expand_sqrt(57).render() == "[7; 1,1,4,1,1,14]"

    def test_side_sequences_for_22(self):
        expansion = expand_sqrt(22)
        assert expansion.r_seq == (0, 4, 2, 4, 4, 2, 4)
        assert expansion.s_seq == (1, 6, 3, 2, 3, 6, 1)

    @pytest.mark.parametrize("f", [f for f in range(2, 400) if int(f ** 0.5) ** 2 != f])
    def test_period_structure(self, f):
        expansion = expand_sqrt(f)
        assert expansion.period[-1] == 2 * expansion.a0
        assert expansion.interior == expansion.interior[::-1]
        assert 1 not in expansion.s_seq[1:-1]
        assert all(0 < a <= expansion.a0 for a in expansion.interior)
        assert expansion.recovers_root()

    @pytest.mark.parametrize("f", [4, 9, 144, 10 ** 20])
    def test_perfect_square(self, f):
        with pytest.raises(PerfectSquareError):
            expand_sqrt(f)

    @pytest.mark.parametrize("f", [-3, 0, 1])
    def test_out_of_domain(self, f):
        with pytest.raises(DomainError):
            expand_sqrt(f)

    def test_quotient_continues_periodically(self):
        expansion = expand_sqrt(7)
        assert expansion.terms(10) == [2, 1, 1, 1, 4, 1, 1, 1, 4, 1]
        with pytest.raises(IndexError):
            expansion.quotient(-1)

    def test_large_radicand(self):
        expansion = expand_sqrt(10 ** 30 + 1)
        assert expansion.a0 == 10 ** 15
        assert expansion.period == (2 * 10 ** 15,)


class TestConvergents:
    def test_sqrt22_convergents(self):
        pairs = convergents(4, [1, 2, 4, 2, 1, 8], 5)
        assert [(p.A, p.B) for p in pairs] == [(4, 1), (5, 1), (14, 3), (61, 13), (136, 29), (197, 42)]

    def test_index_beyond_quotients(self):
        with pytest.raises(IndexError):
            convergents(4, [1, 2], 3)

    def test_negative_index(self):
        with pytest.raises(DomainError):
            convergents(4, [1], -1)

    def test_table_seeds(self):
        table = ConvergentTable(expand_sqrt(22), 5)
        assert (table.A(-2), table.A(-1), table.B(-2), table.B(-1)) == (0, 1, 1, 0)
        assert (table.A(5), table.B(5)) == (197, 42)
        assert table.pair(2).A == 14

    def test_reversed_value(self):
        # [4; 2, 1] = 4 + 1/(2 + 1/1) = 13/3, and A_2/A_1 of [1; 2, 4] is 13/3
        assert reversed_value([1, 2, 4]) == Fraction(13, 3)
        assert numerators([1, 2, 4]) == [1, 1, 3, 13]

    def test_reversed_value_rejects_bad_input(self):
        with pytest.raises(DomainError):
            reversed_value([])
        with pytest.raises(DomainError):
            reversed_value([1, 0])


class TestMiddleQuotient:
    def test_special_middle_for_22(self):
        expansion = expand_sqrt(22)
        assert middle_quotient_in_range(expansion)
        assert has_special_middle(expansion)

    @pytest.mark.parametrize("f,s_m", [(8, 4), (12, 3)])
    def test_small_a0_exceptions(self, f, s_m):
        expansion = expand_sqrt(f)
        assert middle_quotient_in_range(expansion)
        assert expansion.s_seq[expansion.half_index] == s_m
        assert not has_special_middle(expansion)

    def test_odd_period_has_no_middle(self):
        assert not middle_quotient_in_range(expand_sqrt(13))

    def test_middle_outside_range(self):
        # sqrt(57): a_3 = 4, a0 = 7
        assert not middle_quotient_in_range(expand_sqrt(57))


class TestIdentityReport:
    @pytest.mark.parametrize("f", [f for f in range(2, 300) if int(f ** 0.5) ** 2 != f])
    def test_all_identities_hold(self, f):
        report = identity_report(f)
        assert report.passed, [(c.name, c.detail) for c in report.failures]

    def test_even_period_checks(self):
        names = {c.name for c in identity_report(22).checks}
        assert {"even_half_solution", "middle_remainder", "middle_quotient", "period_two_mod_four"} <= names
        assert "odd_half_solution" not in names

    def test_odd_period_checks(self):
        names = {c.name for c in identity_report(13).checks}
        assert {"odd_half_solution", "odd_period_doubling"} <= names
        assert "even_half_solution" not in names

    @pytest.mark.parametrize("f", [8, 12])
    def test_middle_checks_skipped_without_special_middle(self, f):
        names = {c.name for c in identity_report(f).checks}
        assert "middle_denominator" not in names
        assert "middle_quotient" not in names


@pytest.mark.slow
class TestIdentityReportFullRange:
    def test_every_base_up_to_5000(self):
        failures = []
        for f in range(2, 5001):
            if int(f ** 0.5) ** 2 == f:
                continue
            report = identity_report(f)
            failures.extend((f, check.name, check.detail) for check in report.failures)
        assert failures == []
