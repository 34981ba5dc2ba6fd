"""Tests for Pell equation solutions and the residue table."""

import pytest

from core.exceptions import DomainError, PerfectSquareError, UnclassifiedError
from core.pell import (
    CONGRUENCE_TABLE,
    brute_force_solutions,
    congruence_check,
    congruence_profile,
    fundamental_solution,
    negative_fundamental,
    nth_solution,
    period_solution,
    solutions,
)
from core.types import PellSolution
from tests.conftest import KNOWN_SOLUTIONS


class TestFundamentalSolution:
    @pytest.mark.parametrize("f,c,h", KNOWN_SOLUTIONS)
    def test_known_solutions(self, f, c, h):
        solution = fundamental_solution(f)
        assert (solution.X, solution.Y) == (c, h)
        assert solution.norm == 1
        assert (solution.sign, solution.rank) == (1, 1)

    @pytest.mark.parametrize("f", [f for f in range(2, 60) if int(f ** 0.5) ** 2 != f])
    def test_matches_brute_force(self, f):
        solution = fundamental_solution(f)
        if solution.Y > 2000:
            pytest.skip("fundamental solution beyond the brute force window")
        positive = [(X, Y) for X, Y, sign in brute_force_solutions(f, solution.Y) if sign == 1]
        assert positive[0] == (solution.X, solution.Y)

    def test_perfect_square(self):
        with pytest.raises(PerfectSquareError):
            fundamental_solution(49)


class TestNegativeSolution:
    @pytest.mark.parametrize("f,X,Y", [(2, 1, 1), (5, 2, 1), (10, 3, 1), (13, 18, 5), (61, 29718, 3805)])
    def test_odd_period(self, f, X, Y):
        solution = negative_fundamental(f)
        assert (solution.X, solution.Y, solution.sign) == (X, Y, -1)
        assert solution.norm == -1

    @pytest.mark.parametrize("f", [3, 7, 22, 34, 57])
    def test_even_period_has_none(self, f):
        assert negative_fundamental(f) is None

    def test_square_of_negative_is_fundamental(self):
        negative = negative_fundamental(13)
        positive = fundamental_solution(13)
        assert negative.X ** 2 + 13 * negative.Y ** 2 == positive.X
        assert 2 * negative.X * negative.Y == positive.Y


class TestHigherSolutions:
    def test_nth_solution(self):
        assert nth_solution(2, 2) == PellSolution(f=2, X=17, Y=12, sign=1, rank=2)
        second = nth_solution(22, 2)
        assert (second.X, second.Y) == (77617, 16548)
        assert second.norm == 1

    def test_nth_solution_rank_one_is_fundamental(self):
        assert nth_solution(43, 1) == fundamental_solution(43)

    def test_nth_solution_bad_rank(self):
        with pytest.raises(DomainError):
            nth_solution(2, 0)

    def test_period_solution_signs(self):
        first = period_solution(2, 1)
        second = period_solution(2, 2)
        assert (first.X, first.Y, first.sign) == (1, 1, -1)
        assert (second.X, second.Y, second.sign) == (3, 2, 1)
        assert period_solution(22, 3).norm == 1

    def test_period_solution_bad_count(self):
        with pytest.raises(DomainError):
            period_solution(22, 0)

    def test_solutions_alternate_in_sign(self):
        found = solutions(2, 3)
        assert [(s.X, s.Y, s.sign) for s in found] == [(1, 1, -1), (3, 2, 1), (7, 5, -1)]

    def test_solutions_even_period(self):
        found = solutions(3, 3)
        assert [(s.X, s.Y) for s in found] == [(2, 1), (7, 4), (26, 15)]
        assert all(s.norm == 1 for s in found)

    def test_solutions_agree_with_brute_force(self):
        found = solutions(2, 3)
        assert brute_force_solutions(2, 5) == [(s.X, s.Y, s.sign) for s in found]

    def test_solutions_negative_count(self):
        with pytest.raises(DomainError):
            solutions(2, -1)


class TestCongruenceTable:
    def test_rows_per_class(self):
        assert sorted(CONGRUENCE_TABLE) == [1, 2, 3]
        assert congruence_profile(8).admitted == ()

    @pytest.mark.parametrize("f,label", [
        (22, "c = +-3 (mod 8), h = 2 (mod 4)"),
        (18, "c = +-1 (mod 16), h = 0 (mod 4)"),
        (57, "c = +-1 (mod 8), h = 0 (mod 4)"),
        (43, "c = 0 (mod 2), h = 1 (mod 2)"),
        (5, "c = +-1 (mod 8), h = 0 (mod 4)"),
    ])
    def test_known_rows(self, f, label):
        match = congruence_check(f)
        assert not match.outside_table
        assert match.row.label == label

    @pytest.mark.parametrize("f", [f for f in range(2, 500) if int(f ** 0.5) ** 2 != f and f % 4])
    def test_every_base_matches_one_row(self, f):
        assert congruence_check(f).row is not None

    def test_zero_mod_four_is_outside(self):
        match = congruence_check(12)
        assert match.outside_table
        assert match.row is None
        assert (match.solution.X, match.solution.Y) == (7, 2)

    def test_unclassified(self, mocker):
        mocker.patch(
            "core.pell.fundamental_solution",
            return_value=PellSolution(f=22, X=4, Y=1),
        )
        with pytest.raises(UnclassifiedError):
            congruence_check(22)


WINDOW = 10_000


def _period_solutions_within(f, y_max):
    found = set()
    k = 1
    while True:
        solution = period_solution(f, k)
        if solution.Y > y_max:
            return found
        found.add((solution.X, solution.Y, solution.sign))
        k += 1


@pytest.mark.slow
class TestSolutionOracles:
    """Brute force over Y against the continued fraction, f <= 500."""

    NON_SQUARES = [f for f in range(2, 501) if int(f ** 0.5) ** 2 != f]

    def test_fundamental_solution_is_minimal(self):
        for f in self.NON_SQUARES:
            solution = fundamental_solution(f)
            positive = [(X, Y) for X, Y, sign in brute_force_solutions(f, min(solution.Y, WINDOW)) if sign == 1]
            if solution.Y <= WINDOW:
                assert positive[0] == (solution.X, solution.Y), f
            else:
                assert positive == [], f

    def test_every_small_solution_ends_a_period(self):
        for f in self.NON_SQUARES:
            searched = set(brute_force_solutions(f, WINDOW))
            assert searched == _period_solutions_within(f, WINDOW), f

    def test_congruence_rows_up_to_5000(self):
        for f in range(2, 5001):
            if int(f ** 0.5) ** 2 == f or f % 4 == 0:
                continue
            assert congruence_check(f).row is not None, f
