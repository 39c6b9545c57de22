"""Expression grammar, errors, and printer round trips."""

from fractions import Fraction

import pytest

from cubicalg.exactnum import (
    MultiPoly,
    ParseError,
    PolyFraction,
    SymbolTable,
    parse,
)

TABLE = SymbolTable(
    ("E", "h", "a", "u", "p", "x"),
    atoms=("h", "a"),
)

WTABLE = SymbolTable(
    ("x", "y", "h", "a", "i"),
    imaginary="i",
    atoms=("a", ("x-a", {"x": 1, "a": -1}), ("x+a", {"x": 1, "a": 1})),
)


def mono(table, name):
    return PolyFraction(MultiPoly.sym(table, name))


class TestGrammar:
    def test_numbers_and_rationals(self):
        assert parse("15/4", TABLE) == PolyFraction.const(TABLE, Fraction(15, 4))
        assert parse("-3/2", TABLE) == PolyFraction.const(TABLE, Fraction(-3, 2))

    def test_left_to_right_term_chain(self):
        # 3/4*x parses as (3/4)*x, not 3/(4*x)
        x = mono(TABLE, "x")
        assert parse("3/4*x", TABLE) == Fraction(3, 4) * x

    def test_precedence_and_parens(self):
        E, h, a = (mono(TABLE, s) for s in "Eha")
        got = parse("-48*h^2*E + 48*h^4/a^2", TABLE)
        expected = -48 * h ** 2 * E + 48 * h ** 4 * a ** -2
        assert got == expected

    def test_power_binds_tightest(self):
        h = mono(TABLE, "h")
        assert parse("2*h^3", TABLE) == 2 * h ** 3

    def test_atom_division(self):
        x, a = mono(WTABLE, "x"), mono(WTABLE, "a")
        got = parse("6*(x^2+a^2)/(x^2-a^2)^2", WTABLE)
        expected = 6 * (x ** 2 + a ** 2) / ((x ** 2 - a ** 2) ** 2)
        assert got == expected

    def test_unary_minus_applies_to_first_term(self):
        x, y = mono(WTABLE, "x"), mono(WTABLE, "y")
        assert parse("-x^2+y", WTABLE) == -(x ** 2) + y

    def test_imaginary_symbol(self):
        i = mono(WTABLE, "i")
        assert parse("i^2", WTABLE) == PolyFraction.const(WTABLE, -1)
        assert parse("(1+i)*(1-i)", WTABLE) == PolyFraction.const(WTABLE, 2)


class TestErrors:
    def test_unknown_symbol_offset(self):
        with pytest.raises(ParseError) as info:
            parse("x + q", TABLE)
        assert info.value.position == 4

    def test_illegal_division(self):
        with pytest.raises(ParseError):
            parse("1/(x+1)", TABLE)

    def test_trailing_input(self):
        with pytest.raises(ParseError):
            parse("x 3", TABLE)

    def test_bad_exponent(self):
        with pytest.raises(ParseError):
            parse("x^-2", TABLE)

    def test_unexpected_character(self):
        with pytest.raises(ParseError):
            parse("x + $", TABLE)

    def test_unbalanced_parens(self):
        with pytest.raises(ParseError):
            parse("(x + 1", TABLE)


class TestRoundTrip:
    CASES = [
        "x",
        "-x",
        "15/4",
        "-4*h^6/a^4",
        "x^2 - 2*x + 1",
        "(x + a)/a/(x-a)",
        "3/4*x*y - 1/2",
        "x^3*y^2 + x*y + y",
    ]

    @pytest.mark.parametrize("text", CASES)
    def test_parse_format_parse(self, text):
        table = WTABLE
        first = parse(text, table)
        second = parse(first.format(), table)
        assert first == second

    def test_format_of_parsed_canonical(self):
        v = parse("(a + x)/(x-a)/a", WTABLE)
        assert parse(v.format(), WTABLE) == v
