from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garside_ribbons.errors import ParseError, UnknownAtom
from garside_ribbons.expr import (
    format_fraction,
    parse_atom,
    parse_element,
    parse_expr,
    parse_fraction,
    parse_parabolic,
)
from garside_ribbons.groups import GroupFraction, reduce_fraction
from garside_ribbons.parabolic import parabolic_names


def test_words(A2):
    assert parse_element(A2, "") == ()
    assert parse_element(A2, "1") == ()
    assert parse_element(A2, "Delta") == (A2.delta,)
    assert parse_element(A2, "s1.s2.s1") == (A2.delta,)
    assert parse_element(A2, "s1^2.s2") == parse_element(A2, "s1.s1.s2")
    assert parse_element(A2, "(s1.s2)^3") == parse_element(A2, "Delta^2")
    assert parse_element(A2, " s1 . 1 . s2 ") == parse_element(A2, "s1.s2")


def test_parabolic_delta(S5):
    assert parse_element(S5, "Delta_P[s5,s6]") == parse_element(S5, "s5.s1.s3")
    assert parse_element(S5, "Delta_P[]") == ()
    assert parabolic_names(S5, parse_parabolic(S5, "s5, s6")) == ["s1", "s2", "s3", "s5", "s6", "s8"]
    assert parse_parabolic(S5, "[]").rank == 0
    assert parse_atom(S5, "s10") == S5.atoms[9]


def test_fractions(A2):
    x = parse_expr(A2, "inv(s2).s1.s2")
    assert x == GroupFraction(parse_element(A2, "s2"), parse_element(A2, "s1.s2"))
    assert parse_fraction(A2, "inv(s1).s1.s2") == GroupFraction((), parse_element(A2, "s2"))
    assert parse_fraction(A2, "inv(s1)") == GroupFraction(parse_element(A2, "s1"), ())
    assert parse_fraction(A2, "s1") == GroupFraction((), parse_element(A2, "s1"))
    with pytest.raises(ParseError):
        parse_element(A2, "inv(s1)")


@pytest.mark.parametrize("text,pos", [("s1.s9", 3), ("s1..s2", 3), ("s1.s2)", 5), ("s1^", 3),
                                      ("s1 $", 3), ("inv(s1", 6), ("2", 0)])
def test_errors_carry_positions(A2, text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(A2, text)
    assert info.value.position == pos


def test_unknown_atom_code(A2):
    with pytest.raises(UnknownAtom) as info:
        parse_element(A2, "s1.x")
    assert info.value.to_dict()["error"] == "unknown_atom"


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_round_trip(S4, data):
    words = st.lists(st.sampled_from(S4.atoms), max_size=6).map(S4.normal_form)
    g = data.draw(words)
    assert parse_element(S4, S4.format(g)) == g
    x = reduce_fraction(S4, data.draw(words), data.draw(words))
    assert parse_fraction(S4, format_fraction(S4, x)) == x
