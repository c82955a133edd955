import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringlab.errors import CardinalityError, ParseError
from ringlab.expr import Matrix, Product, UpperTri, ZMod, parse_ring_expr


@pytest.mark.parametrize(
    "text, tree, size",
    [
        ("Z5", ZMod(5), 5),
        ("M2(Z2)", Matrix(2, ZMod(2)), 16),
        ("T2(Z3) x Z4", Product(UpperTri(2, ZMod(3)), ZMod(4)), 108),
        (" T 2 ( Z 3 )x Z4 ", Product(UpperTri(2, ZMod(3)), ZMod(4)), 108),
        ("Z2 x Z3 x Z4", Product(Product(ZMod(2), ZMod(3)), ZMod(4)), 24),
        ("Z1", ZMod(1), 1),
    ],
)
def test_parse_examples(text, tree, size):
    d = parse_ring_expr(text)
    assert d == tree
    assert d.cardinality == size


def test_cardinality_formulas():
    assert parse_ring_expr("M3(Z2)", cap=None).cardinality == 2 ** 9
    assert parse_ring_expr("T3(Z2)").cardinality == 2 ** 6
    assert parse_ring_expr("M2(M2(Z2))").cardinality == 16 ** 4


@pytest.mark.parametrize(
    "text, offset",
    [("Q5", 0), ("Z", 1), ("Z0", 1), ("M2(Z2", 5), ("Z2 x", 4), ("Z2 Z3", 3), ("", 0)],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.offset == offset


def test_cap_error_reports_cardinality():
    with pytest.raises(CardinalityError) as info:
        parse_ring_expr("M3(Z4)")
    assert info.value.cardinality == 4 ** 9
    assert parse_ring_expr("M3(Z4)", cap=None).cardinality == 4 ** 9
    with pytest.raises(CardinalityError):
        parse_ring_expr("Z100", cap=99)


descriptors = st.recursive(
    st.integers(1, 9).map(ZMod),
    lambda inner: st.one_of(
        st.builds(Matrix, st.integers(1, 3), inner),
        st.builds(UpperTri, st.integers(1, 3), inner),
        st.builds(Product, inner, inner),
    ),
    max_leaves=5,
)


@given(descriptors)
def test_printer_round_trip(d):
    assert parse_ring_expr(str(d), cap=None) == d
