"""Text syntax of ordinal notations."""

import pytest
from hypothesis import given

import strategies as S
from ordforge.errors import ParseError
from ordforge.ordinals import OMEGA, ONE, W, nat_sum, omega_tower
from ordforge.ordtext import parse_ord, pretty, to_text


@pytest.mark.parametrize("text, canonical", [
    ("0", "0"),
    ("1 + w", "w"),
    ("w + 1", "w+1"),
    ("phi(0,W+2)", "w^(W+2)"),
    ("w^(W)", "W"),
    ("w # 1", "w+1"),
    ("1 # w", "w+1"),
    ("tower(2, W+1)", "w^(w^(W+1))"),
    ("psi(psi(W) + W)", "psi(W)"),
])
def test_canonical_text(text, canonical):
    assert to_text(parse_ord(text)) == canonical


def test_operators_match_library_calls():
    assert parse_ord("w # 1") == nat_sum(OMEGA, ONE)
    assert parse_ord("tower(2,W)") == omega_tower(2, W)


def test_pretty_forms():
    assert pretty(W) == "Ω"
    assert pretty(parse_ord("w^(W+1)")) == "Ω·ω"
    assert pretty(parse_ord("psi(w^(W+1))")) == "ψ_Ω(Ω·ω)"
    assert pretty(parse_ord("phi(2,w+1)")) == "φ(2, ω + 1)"
    assert pretty(parse_ord("w^(w^(W+1))")) == "ω^(Ω·ω)"


@pytest.mark.parametrize("text, offset", [
    ("phi(1", 5),
    ("2 +* 3", 3),
    ("x", 0),
])
def test_parse_errors_carry_the_offset(text, offset):
    with pytest.raises(ParseError, match=f"offset {offset}"):
        parse_ord(text)


@given(S.ordinals(6))
def test_round_trip(x):
    assert parse_ord(to_text(x)) == x
