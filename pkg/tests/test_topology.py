import pytest

from finspec.ring import ring_zmod
from finspec.spectrum import spec
from finspec.topology import (
    MAX_POINTS,
    FiniteTopology,
    NotT0Error,
    SpectralPoset,
    TopologySizeError,
    alexandrov_topology,
    antichain,
    chain,
    containment_poset,
    diamond,
    fence,
    flat_topology,
    flat_topology_from_ideals,
    format_poset,
    is_discrete,
    is_hausdorff,
    is_t0,
    join,
    mask_of,
    parse_poset,
    patch_topology,
    points_closed,
    points_of,
    read_poset,
    refines,
    specialization_order,
    topologies_equal,
    topology_from_subbasis,
    tree,
    wedge,
    zariski_topology,
)
from finspec.ring import all_ideals

from conftest import corpus_posets, corpus_rings


def opens(t):
    return sorted(points_of(o) for o in t.opens)


DVR = chain(2)  # 0 < m with m = 1


def sierpinski():
    return topology_from_subbasis(2, [[0]])


# -- construction ----------------------------------------------------------------------


def test_subbasis_examples():
    assert opens(sierpinski()) == [[], [0], [0, 1]]
    assert is_discrete(topology_from_subbasis(4, [[i] for i in range(4)]))
    assert len(topology_from_subbasis(4, [[i] for i in range(4)]).opens) == 16
    assert opens(topology_from_subbasis(2, [])) == [[], [0, 1]]


def test_topology_size_cap():
    with pytest.raises(TopologySizeError):
        topology_from_subbasis(MAX_POINTS + 1, [])


def test_invalid_family_rejected():
    with pytest.raises(ValueError):
        FiniteTopology(3, [0, mask_of([0]), mask_of([1]), 0b111])  # union {0,1} missing


def test_closure():
    t = sierpinski()
    assert points_of(t.closure(mask_of([0]))) == [0, 1]
    assert points_of(t.closure(mask_of([1]))) == [1]


# -- named topologies ------------------------------------------------------------------


def test_zariski_examples():
    assert is_discrete(zariski_topology(spec(ring_zmod(12))))
    assert opens(zariski_topology(DVR)) == [[], [0], [0, 1]]
    assert is_discrete(zariski_topology(antichain(4)))


def test_flat_examples():
    assert is_discrete(flat_topology(spec(ring_zmod(12))))
    assert opens(flat_topology(DVR)) == [[], [0, 1], [1]]
    assert opens(flat_topology(chain(1))) == [[], [0]]


def test_patch_examples():
    assert is_discrete(patch_topology(DVR))
    assert is_discrete(patch_topology(spec(ring_zmod(12))))
    assert is_discrete(patch_topology(chain(1)))


def test_hausdorff_examples():
    assert is_hausdorff(topology_from_subbasis(3, [[0], [1], [2]]))
    assert not is_hausdorff(sierpinski())
    assert not is_hausdorff(zariski_topology(DVR))


def test_specialization_examples():
    assert specialization_order(topology_from_subbasis(3, [[0], [1], [2]])).is_antichain()
    assert specialization_order(zariski_topology(DVR)) == DVR
    assert specialization_order(zariski_topology(spec(ring_zmod(12)))).is_antichain()


def test_specialization_rejects_non_t0():
    t = topology_from_subbasis(2, [])
    assert not is_t0(t)
    with pytest.raises(NotT0Error):
        specialization_order(t)


def test_topologies_equal_examples():
    s = spec(ring_zmod(12))
    assert topologies_equal(zariski_topology(s), flat_topology(s))
    assert not topologies_equal(zariski_topology(DVR), flat_topology(DVR))
    t = sierpinski()
    assert topologies_equal(t, t)
    with pytest.raises(ValueError):
        topologies_equal(t, zariski_topology(chain(3)))


def test_points_closed_examples():
    assert points_closed(topology_from_subbasis(2, [[0], [1]]))
    assert not points_closed(sierpinski())
    assert not points_closed(flat_topology(DVR))


# -- posets ---------------------------------------------------------------------------


def test_named_posets():
    assert chain(4).covers() == [(0, 1), (1, 2), (2, 3)]
    assert len(chain(4).edges()) == 6
    assert diamond().covers() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert antichain(3).is_antichain()
    assert diamond().size == 4
    assert len(wedge(3).edges()) == 3
    assert fence(4).size == 4
    t = tree([0, 0, 1])
    assert t.size == 4 and t.is_minimal(0)


def test_poset_parse_round_trip():
    text = "# the DVR\npoints: 2\n0 < 1\n"
    p = parse_poset(text)
    assert p == DVR
    assert parse_poset(format_poset(p)) == p


def test_poset_transitive_closure_and_cycle():
    p = parse_poset("points: 3\n0 < 1\n1 < 2\n")
    assert p.leq[0, 2]
    with pytest.raises(ValueError):
        parse_poset("points: 2\n0 < 1\n1 < 0\n")
    with pytest.raises(ValueError):
        parse_poset("points: 2\n0 < 5\n")


def test_read_poset_file(tmp_path):
    path = tmp_path / "dvr.poset"
    path.write_text("points: 2\n0 < 1\n")
    assert read_poset(path) == DVR


def test_containment_poset_of_local_ring_is_point():
    p = containment_poset(spec(ring_zmod(8)))
    assert p.size == 1


# -- invariants over all subjects -------------------------------------------------------


SPACES = [(t, spec(r)) for t, r in corpus_rings() if len(spec(r)) <= 12] + [
    (t, p) for t, p in corpus_posets() if p.size <= 12
]


def _ids(x):
    return x if isinstance(x, str) else ""


@pytest.mark.parametrize("label,space", SPACES, ids=_ids)
def test_duality_involution(label, space):
    z, f = zariski_topology(space), flat_topology(space)
    if is_t0(z):
        assert specialization_order(f) == specialization_order(z).dual()
        assert specialization_order(z).dual().dual() == specialization_order(z)
    if isinstance(space, SpectralPoset):
        assert zariski_topology(space.dual()) == f
        assert flat_topology(space.dual()) == z


@pytest.mark.parametrize("label,space", SPACES, ids=_ids)
def test_patch_refines_both_and_is_join(label, space):
    z, f, p = zariski_topology(space), flat_topology(space), patch_topology(space)
    assert refines(p, z) and refines(p, f)
    assert p == join(z, f)
    assert is_discrete(p)
    assert is_hausdorff(p)


@pytest.mark.parametrize("label,space", SPACES, ids=_ids)
def test_hausdorff_iff_discrete(label, space):
    for t in (zariski_topology(space), flat_topology(space)):
        assert is_hausdorff(t) == is_discrete(t) == points_closed(t)


@pytest.mark.parametrize("label,p", [(t, p) for t, p in corpus_posets()], ids=_ids)
def test_poset_round_trip_through_zariski(label, p):
    assert specialization_order(zariski_topology(p)) == p
    assert zariski_topology(p) == alexandrov_topology(p)


@pytest.mark.parametrize("label,r", corpus_rings(max_size=36), ids=_ids)
def test_ring_and_poset_views_agree(label, r):
    s = spec(r)
    p = containment_poset(s)
    assert zariski_topology(s) == zariski_topology(p)
    assert flat_topology(s) == flat_topology(p)
    assert flat_topology_from_ideals(s, all_ideals(r)) == flat_topology(s)
