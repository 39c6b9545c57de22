"""Fraction-free linear solving over polynomial entries."""

from fractions import Fraction

import pytest

from cubicalg.exactnum import (
    InconsistentSystem,
    MultiPoly,
    RankDeficientSystem,
    SymbolTable,
    solve_exact,
    solve_fractions,
)

TABLE = SymbolTable(("s", "t"))


def sym(name):
    return MultiPoly.sym(TABLE, name)


def const(q):
    return MultiPoly.const(TABLE, q)


class TestSolveExact:
    def test_square_symbolic(self):
        s = sym("s")
        # [1 s; 0 1] x = [s^2 + 1, s]
        rows = [[const(1), s], [const(0), const(1)]]
        rhs = [s * s + 1, s]
        (n0, d0), (n1, d1) = solve_exact(rows, rhs)
        assert d0.is_rational() and d1.is_rational()
        assert n0 * d0.as_fraction() ** -1 == 1
        assert n1 == s

    def test_overdetermined_consistent(self):
        s = sym("s")
        rows = [
            [const(1), const(0)],
            [const(0), const(1)],
            [const(1), const(1)],
        ]
        rhs = [s, const(2), s + 2]
        sol = solve_exact(rows, rhs)
        assert sol[0][0] == s and sol[0][1] == const(1)
        assert sol[1][0] == const(2)

    def test_inconsistent_raises(self):
        rows = [[const(1)], [const(1)]]
        rhs = [const(1), const(2)]
        with pytest.raises(InconsistentSystem):
            solve_exact(rows, rhs)

    def test_rank_deficient_raises(self):
        s = sym("s")
        rows = [[s, s], [s, s]]
        rhs = [s, s]
        with pytest.raises(RankDeficientSystem):
            solve_exact(rows, rhs)

    def test_rational_denominator_solution(self):
        s = sym("s")
        # s * x = s^2 + s  ->  x = s + 1
        sol = solve_exact([[s]], [s * s + s])
        n, d = sol[0]
        assert n == s + 1
        assert d == const(1)

    def test_nontrivial_ratio(self):
        s, t = sym("s"), sym("t")
        # (s + t) x = s^2 - t^2
        sol = solve_exact([[s + t]], [s * s - t * t])
        n, d = sol[0]
        assert n == s - t
        assert d == const(1)


class TestSolveFractions:
    def test_square(self):
        rows = [[1, 2], [3, 4]]
        rhs = [5, 6]
        x = solve_fractions(rows, rhs)
        assert x == [Fraction(-4), Fraction(9, 2)]

    def test_overdetermined_inconsistent(self):
        with pytest.raises(InconsistentSystem):
            solve_fractions([[1], [1]], [1, 2])

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientSystem):
            solve_fractions([[0, 1], [0, 2]], [1, 2])
