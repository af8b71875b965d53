import pytest
from hypothesis import given

from verbclosure.core.errors import ParseError, VarIndexError
from verbclosure.core.grammar import parse_element, parse_word
from verbclosure.models import Ball, Carrier, DihedralElt, FreeWord, GElt, KleinElt, VFour, ZxDElt
from tests.strategies import free_words


@pytest.mark.parametrize(
    "text, expected",
    [
        ("b*a", KleinElt(1, 1)),
        ("a b", KleinElt(1, -1)),
        ("b^2", KleinElt(2, 0)),
        ("[a, b]", KleinElt(0, -2)),
        ("(b a)^2", KleinElt(2, 0)),
        ("1", KleinElt.identity()),
        ("a^-3*b^-1", KleinElt(-1, 3)),
    ],
)
def test_k_elements(text, expected):
    assert parse_element(text, Carrier.K) == expected


def test_g_and_d_and_zd_elements():
    assert parse_element("d1*b*a1^2", Carrier.G) == GElt(VFour.D1, 1, (2, 0, 0))
    assert parse_element("a1 a2 a3", Carrier.G) == GElt(VFour.E, 0, (1, 1, 1))
    assert parse_element("b*a^3", Carrier.D) == DihedralElt(1, 3)
    assert parse_element("(3; b*a^5)", Carrier.ZD) == ZxDElt(3, DihedralElt(1, 5))
    assert parse_element("(1; b)(1; b)", Carrier.ZD) == ZxDElt(2, DihedralElt.identity())


@pytest.mark.parametrize("carrier", list(Carrier))
def test_elements_print_and_parse_back(carrier):
    for g in Ball(carrier, 2, 2):
        assert parse_element(str(g), carrier) == g


@given(free_words())
def test_words_print_and_parse_back(w):
    assert parse_word(str(w), w.arity) == w


def test_word_syntax():
    assert parse_word("x y x") == FreeWord(((1, 1), (2, 1), (1, 1)), 2)
    assert parse_word("x1^2 x3") == FreeWord(((1, 2), (3, 1)), 3)
    assert parse_word("t").arity == 4
    assert parse_word("[x, y]^2").length == 8
    assert parse_word("x x^-1").is_identity


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as excinfo:
        parse_element("b^x", Carrier.K)
    error = excinfo.value
    assert error.exit_code == 2
    assert error.position == 1
    assert "^" in str(error)


@pytest.mark.parametrize("text", ["", "x^", "(x", "a", "x**y"])
def test_bad_words(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_word_arity_too_small():
    with pytest.raises(VarIndexError):
        parse_word("x y z", 2)
