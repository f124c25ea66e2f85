import pytest
from hypothesis import given, strategies as st

from padic.expr import Add, Dist, IntLit, Mul, Neg, ParseError, Val, parse, to_source


def lit(n):
    return IntLit(n)


def test_examples():
    assert parse("3 + 4*7") == Add(lit(3), Mul(lit(4), lit(7)))
    assert parse("-(2+3)") == Neg(Add(lit(2), lit(3)))
    assert parse("d(1, 26)") == Dist(lit(1), lit(26))


def test_left_associativity():
    assert parse("1+2+3") == Add(Add(lit(1), lit(2)), lit(3))
    assert parse("1*2*3") == Mul(Mul(lit(1), lit(2)), lit(3))


def test_unary_binds_tighter_than_products():
    assert parse("-2*3") == Mul(Neg(lit(2)), lit(3))
    assert parse("2*-3") == Mul(lit(2), Neg(lit(3)))
    assert parse("--4") == Neg(Neg(lit(4)))


def test_queries():
    assert parse("v(50)") == Val(lit(50))
    assert parse(" v ( 2 * 25 ) ") == Val(Mul(lit(2), lit(25)))
    assert parse("d(-1, 2+3)") == Dist(Neg(lit(1)), Add(lit(2), lit(3)))


@pytest.mark.parametrize(
    "src, offset, expected",
    [
        ("", 0, {"INT", "(", "-"}),
        ("3 +", 3, {"INT", "(", "-"}),
        ("(1 + 2", 6, {")"}),
        ("1 2", 2, {"+", "*", "end of input"}),
        ("d(1 2)", 4, {","}),
        ("v 3", 2, {"("}),
        ("v(1) + 2", 5, {"end of input"}),
        ("1 + v(2)", 4, {"INT", "(", "-"}),
        ("x", 0, {"INT", "(", "-"}),
        ("4 / 2", 2, {"+", "*", "end of input"}),
    ],
)
def test_errors_carry_offset_and_expectations(src, offset, expected):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.offset == offset
    assert info.value.expected == expected


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as info:
        parse("(1 + é")
    assert info.value.offset == 5
    with pytest.raises(ParseError) as info:
        parse("é")
    assert info.value.offset == 0
    with pytest.raises(ParseError) as info:
        parse("1 é 2")
    assert info.value.offset == 2


def test_canonical_printing():
    assert to_source(parse("(3+4)*(5)")) == "(3 + 4) * 5"
    assert to_source(parse("1+(2+3)")) == "1 + (2 + 3)"
    assert to_source(parse("-(-3)")) == "--3"
    assert to_source(parse("d(1,26)")) == "d(1, 26)"
    assert to_source(parse("v((1))")) == "v(1)"


terms = st.recursive(
    st.integers(min_value=0, max_value=10**30).map(IntLit),
    lambda sub: st.one_of(
        st.builds(Add, sub, sub),
        st.builds(Mul, sub, sub),
        st.builds(Neg, sub),
    ),
    max_leaves=25,
)
exprs = st.one_of(terms, st.builds(Val, terms), st.builds(Dist, terms, terms))


@given(exprs)
def test_round_trip(e):
    assert parse(to_source(e)) == e
