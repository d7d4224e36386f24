import pytest

from finspec.expr import build_ring
from finspec.ring import SizeBoundError, enumerate_homs, ideal_generated, nilradical, ring_zmod, unit_ideal, zero_ideal
from finspec.spectrum import (
    basic_open,
    is_maximal,
    is_prime_ideal,
    residue_field,
    spec,
    spec_bruteforce_oracle,
    spectrum_map,
    vanishing_set,
)

from conftest import corpus_rings


def sets(s):
    return sorted(sorted(p.members) for p in s)


def test_spec_z12():
    s = spec(ring_zmod(12))
    assert [p.ideal.sorted() for p in s] == [[0, 3, 6, 9], [0, 2, 4, 6, 8, 10]]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_spec_field(q):
    s = spec(build_ring(f"GF({q})"))
    assert sets(s) == [[0]]


def test_spec_product_z2_z3():
    r = build_ring("Z/2 x Z/3")
    # index i*3 + j for (i, j)
    expected = [[0, 1, 2], [0, 3]]
    assert sets(spec(r)) == sorted(expected)


def test_oracle_examples():
    assert sets(spec_bruteforce_oracle(ring_zmod(30))) == sorted(
        [list(range(0, 30, 2)), list(range(0, 30, 3)), list(range(0, 30, 5))]
    )
    assert len(spec_bruteforce_oracle(ring_zmod(1))) == 0
    assert sets(spec_bruteforce_oracle(build_ring("Z/2[x]/(x^2)"))) == [[0, 2]]


def test_oracle_refuses_large_non_cyclic():
    with pytest.raises(SizeBoundError):
        spec_bruteforce_oracle(build_ring("Z/3 x Z/9"))


@pytest.mark.parametrize("n", range(1, 101))
def test_spec_matches_oracle_zmod(n):
    r = ring_zmod(n)
    assert spec(r).member_sets() == spec_bruteforce_oracle(r).member_sets()


@pytest.mark.parametrize("label,r", corpus_rings(max_size=16), ids=lambda x: x if isinstance(x, str) else "")
def test_spec_matches_oracle_corpus(label, r):
    assert spec(r).member_sets() == spec_bruteforce_oracle(r).member_sets()


@pytest.mark.parametrize("label,r", corpus_rings(max_size=64), ids=lambda x: x if isinstance(x, str) else "")
def test_nilradical_is_intersection_of_primes(label, r):
    s = spec(r)
    inter = set(r.elements)
    for p in s:
        inter &= p.members
    assert nilradical(r).members == inter


@pytest.mark.parametrize("label,r", corpus_rings(max_size=64), ids=lambda x: x if isinstance(x, str) else "")
def test_every_prime_maximal_with_field_residue(label, r):
    for p in spec(r):
        assert is_prime_ideal(p.ideal)
        assert is_maximal(p.ideal)
        k, pi = residue_field(r, p)
        assert k.is_field()
        assert pi.kernel().members == p.members


def test_spec_of_product_is_disjoint_union():
    for a, b in [("Z/4", "Z/9"), ("GF(4)", "Z/6"), ("Z/2[x]/(x^2)", "Z/5")]:
        ra, rb = build_ring(a), build_ring(b)
        assert len(spec(build_ring(f"{a} x {b}"))) == len(spec(ra)) + len(spec(rb))


def test_residue_fields_z12():
    r = ring_zmod(12)
    sizes = {tuple(p.ideal.sorted()): residue_field(r, p)[0].size for p in spec(r)}
    assert sizes[(0, 2, 4, 6, 8, 10)] == 2
    assert sizes[(0, 3, 6, 9)] == 3
    f = build_ring("GF(8)")
    assert residue_field(f, spec(f)[0])[0].size == 8


def test_basic_open_examples():
    r = ring_zmod(12)
    s = spec(r)
    three = s.index_of(ideal_generated(r, [3]))
    assert basic_open(s, 2) == {three}
    assert basic_open(s, 0) == frozenset()
    assert basic_open(s, 1) == {0, 1}
    assert basic_open(s, 6) == frozenset()


def test_vanishing_set_examples():
    r = ring_zmod(12)
    s = spec(r)
    assert vanishing_set(s, ideal_generated(r, [6])) == {0, 1}
    assert vanishing_set(s, zero_ideal(r)) == {0, 1}
    assert vanishing_set(s, unit_ideal(r)) == frozenset()


def test_spectrum_map_of_projection():
    r = build_ring("Z/2 x Z/3")
    for h in enumerate_homs(r, ring_zmod(2)) + enumerate_homs(r, ring_zmod(3)):
        (k,) = spectrum_map(h)
        assert h.kernel().members == spec(r)[k].members


def test_pointwise_examples_of_nilpotent_ring():
    r = build_ring("Z/4[x]/(x^2)")
    assert r.size == 16
    assert len(nilradical(r).members) == 8
    assert len(spec(r)) == 1
