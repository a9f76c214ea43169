import warnings

import pytest
from hypothesis import given

from monideal import IdealSyntaxError, MonomialIdeal, format_ideal, parse_ideal
from monideal.parse import ReductionWarning, parse_ideal_list

from conftest import primary_ideals
from corpus import ACCEPT, REJECT


def test_corpus_size():
    assert len(ACCEPT) + len(REJECT) == 20


@pytest.mark.parametrize("text, n, gens", ACCEPT)
def test_accept(text, n, gens):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReductionWarning)
        a = parse_ideal(text)
    assert a.n == n and set(a.gens) == gens


@pytest.mark.parametrize("text, column", REJECT)
def test_reject(text, column):
    with pytest.raises(IdealSyntaxError) as info:
        parse_ideal(text)
    assert info.value.column == column
    assert info.value.line == 1
    assert info.value.caret().splitlines()[1].index("^") == column - 1


def test_reduction_warning():
    with pytest.warns(ReductionWarning):
        assert parse_ideal("(x^2, x^3)").gens == ((2,),)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_ideal("(x^2, y^3)")


def test_dimension_override():
    a = parse_ideal("(x^2, z^2)", dim=3)
    assert a.n == 3 and set(a.gens) == {(2, 0, 0), (0, 0, 2)}
    assert parse_ideal("(x^2, y)", dim=4).n == 4
    with pytest.raises(IdealSyntaxError):
        parse_ideal("(x, y, z)", dim=2)


def test_format_examples():
    assert format_ideal(MonomialIdeal(3, [(5, 0, 0), (0, 4, 0), (0, 0, 2)])) == "(x^5, y^4, z^2)"
    assert format_ideal(MonomialIdeal.maximal(5)) == "(x1, x2, x3, x4, x5)"
    assert format_ideal(MonomialIdeal.unit(2)) == "(1)"


@given(primary_ideals(dims=(1, 2, 3, 4, 5)))
def test_round_trip(a):
    text = format_ideal(a)
    assert parse_ideal(text, a.n) == a
    assert format_ideal(parse_ideal(text, a.n)) == text


def test_multiline_batch():
    text = "(x^2, y^3)\n\n# comment\n(x, y)  # trailing\n"
    ideals = parse_ideal_list(text)
    assert [format_ideal(a) for a in ideals] == ["(x^2, y^3)", "(x, y)"]


def test_multiline_error_position():
    with pytest.raises(IdealSyntaxError) as info:
        parse_ideal("(x^2,\n y^)")
    assert (info.value.line, info.value.column) == (2, 4)
