import pytest

from semiprimary.dsl import parse_delta, parse_element, parse_ideal, parse_ring
from semiprimary.errors import ParseError
from semiprimary.harness.universe import Universe

RING_TEXTS = ["Z(12)", "bool(3)", "trunc(Z(4),3)", "prod(Z(2),Z(4))", "quot(Z(12),gen(6))",
              "loc(Z(12),{4})", "prod(Z(2),Z(2),Z(3))", "quot(prod(Z(2),Z(4)),gen((0,2)))"]


@pytest.mark.parametrize("text", RING_TEXTS)
def test_ring_round_trip(text):
    R = parse_ring(text)
    assert parse_ring(R.spec) == R


def test_universe_round_trip():
    for entry in Universe.small():
        R = entry.ring
        assert parse_ring(R.spec) == R
        for I in R.ideals:
            assert parse_ideal(R, I.to_spec()) == I
        for d in entry.deltas:
            again = parse_delta(R, d.to_spec())
            assert [again(I) for I in R.ideals] == [d(I) for I in R.ideals]


def test_elements():
    T = parse_ring("trunc(Z(4),3)")
    assert parse_element(T, "[1,2]") == parse_element(T, "1+2*X")
    assert T.name(parse_element(T, "X^2 + 3*X - 1")) == "3+3*X+X^2"
    P = parse_ring("prod(Z(2),Z(4))")
    assert P.name(parse_element(P, "(1,-1)")) == "(1,3)"
    L = parse_ring("loc(Z(12),{4})")
    assert parse_element(L, "4/4") == L.one
    assert parse_element(parse_ring("Z(5)"), "-1") == 4


def test_whitespace_is_ignored():
    assert parse_ring(" prod( Z(2) , Z(3) ) ") == parse_ring("prod(Z(2),Z(3))")


@pytest.mark.parametrize("text,column", [("Z(3", 4), ("prod(Z(2))", 11), ("foo(2)", 1),
                                          ("Z(1)", 3), ("trunc(bool(2),2)", 7)])
def test_ring_errors_carry_position(text, column):
    with pytest.raises(ParseError) as exc:
        parse_ring(text)
    assert exc.value.line == 1 and exc.value.column == column
    assert f"column {column}" in str(exc.value)


def test_multiline_error_position():
    with pytest.raises(ParseError) as exc:
        parse_ring("prod(Z(2),\n  Q(3))")
    assert (exc.value.line, exc.value.column) == (2, 3)


def test_delta_errors():
    R = parse_ring("Z(6)")
    with pytest.raises(ParseError):
        parse_delta(R, "prodx(id,id)")
    with pytest.raises(ParseError):
        parse_delta(R, "wibble")
    with pytest.raises(ParseError):
        parse_ideal(R, "gen(2,,3)")


def test_table_delta_text():
    R = parse_ring("Z(8)")
    d = parse_delta(R, "table{gen()->gen(),gen(4)->gen(2),gen(2)->gen(2),gen(1)->gen(1)}")
    assert d.validation.ok
    assert parse_delta(R, d.to_spec()).entries == d.entries
