import pytest
from hypothesis import given, strategies as st

from finspec.expr import ParseError, build_ring, format_int_poly, galois_field, is_irreducible, least_irreducible, parse_ring_expr
from finspec.ring import SizeBoundError, is_isomorphic, nilradical, reduced_ring, ring_zmod


def test_examples():
    assert build_ring("Z/12").size == 12
    assert build_ring("Z/2 x GF(4)").size == 8
    r = build_ring("Z/4[x]/(x^2)")
    assert r.size == 16
    assert len(nilradical(r).members) == 8
    assert is_isomorphic(reduced_ring(r)[0], ring_zmod(2))


def test_whitespace_and_labels():
    assert build_ring("  Z / 6  x Z/5 ").label == "Z/6 x Z/5"
    assert build_ring("Z/3[x]/(x^2 - 1)").label == "Z/3[x]/(x^2-1)"


@pytest.mark.parametrize(
    "text",
    ["Z/12", "GF(9)", "Z/2 x Z/3 x GF(4)", "Z/2 x (Z/3 x Z/4)", "Z/2[x]/(x^3+x+1)",
     "(Z/4 x Z/4)/(2)", "Z/12/(6)", "Z/3[x]/(x^2+2x+2)", "(Z/2 x Z/2)[x]/(x^2)"],
)
def test_string_form_reparses(text):
    node = parse_ring_expr(text)
    assert parse_ring_expr(str(node)) == node
    assert build_ring(str(node)).same_tables(build_ring(text))


@pytest.mark.parametrize(
    "text,pos",
    [("", 0), ("Z/", 2), ("Z/0", 0), ("GF(6)", 0), ("Z/4 y", 4), ("Z/4[x]/(2x^2+1)", 8), ("Z/4[x]/(3)", 8),
     ("Q", 0), ("Z/4/(", 5)],
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_ring_expr(text)
    assert info.value.position == pos


def test_quotient_generator_out_of_range():
    with pytest.raises(ValueError):
        build_ring("Z/4/(9)")


def test_size_bound():
    with pytest.raises(SizeBoundError):
        build_ring("Z/4097")


def test_quotient_by_residue():
    assert is_isomorphic(build_ring("Z/12/(6)"), ring_zmod(6))
    assert is_isomorphic(build_ring("Z/12/(4, 6)"), ring_zmod(2))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_galois_fields(q):
    f = galois_field(q)
    assert f.size == q and f.is_field()


def test_least_irreducible():
    assert least_irreducible(2, 2) == [1, 1, 1]
    assert least_irreducible(2, 3) == [1, 1, 0, 1]
    assert least_irreducible(3, 2) == [1, 0, 1]
    assert not is_irreducible([1, 0, 1], 2)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_format_int_poly_round_trips(tail):
    coeffs = tuple(tail) + (1,)
    node = parse_ring_expr(f"Z/7[x]/({format_int_poly(coeffs)})")
    got = node.coeffs
    assert got == coeffs
