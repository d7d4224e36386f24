"""Finite topological spaces, spectral posets, and the Zariski, flat and patch topologies.

Subsets of the ground set ``{0, .., n-1}`` are int bitmasks.  Order
convention, used everywhere: ``p <= q`` means ``p ⊆ q`` for primes, i.e. ``q``
lies in the Zariski closure of ``p``.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .spectrum import Spectrum, basic_open

#: Hard cap on the number of points of an explicit topology.
MAX_POINTS = 16


class TopologySizeError(ValueError):
    pass


class NotT0Error(ValueError):
    pass


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << int(p)
    return m


def points_of(mask: int) -> list[int]:
    out, k = [], 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def _check_points(n: int) -> None:
    if n > MAX_POINTS:
        raise TopologySizeError(f"{n} points exceeds the cap of {MAX_POINTS}")


class FiniteTopology:
    """An explicit family of open subsets of ``{0, .., ground_size-1}``."""

    def __init__(self, ground_size: int, opens: Iterable[int], validate: bool = True):
        _check_points(ground_size)
        self.ground_size = ground_size
        self._open_set = frozenset(int(o) for o in opens)
        self.opens = tuple(sorted(self._open_set))
        if validate:
            self.validate()

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def __repr__(self) -> str:
        return f"FiniteTopology({self.ground_size}, {[points_of(o) for o in self.opens]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteTopology):
            return NotImplemented
        return self.ground_size == other.ground_size and self.opens == other.opens

    def __hash__(self) -> int:
        return hash((self.ground_size, self.opens))

    def validate(self) -> None:
        opens = self._open_set
        if 0 not in opens or self.full not in opens:
            raise ValueError("a topology contains the empty set and the whole space")
        if any(o & ~self.full for o in opens):
            raise ValueError("open set outside the ground set")
        for u in self.opens:
            for v in self.opens:
                if u | v not in opens or u & v not in opens:
                    raise ValueError("family is not closed under union and intersection")

    def is_open(self, subset: int) -> bool:
        return subset in self._open_set

    def is_closed(self, subset: int) -> bool:
        return self.is_open(self.full & ~subset)

    def minimal_neighbourhoods(self) -> list[int]:
        """For each point, the intersection of all opens containing it."""
        nbhd = [self.full] * self.ground_size
        for o in self.opens:
            for x in points_of(o):
                nbhd[x] &= o
        return nbhd

    def closure(self, subset: int) -> int:
        """Smallest closed superset."""
        out = 0
        for x, n in enumerate(self.minimal_neighbourhoods()):
            if n & subset:
                out |= 1 << x
        return out


class SpectralPoset:
    """A finite partial order standing in for the specialization order of a spectral space."""

    def __init__(self, leq, labels: Sequence[str] | None = None, name: str = "P"):
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError("order relation must be a square matrix")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("order is not antisymmetric")
        if ((leq.astype(int) @ leq.astype(int) > 0) & ~leq).any():
            raise ValueError("order is not transitive")
        leq.flags.writeable = False
        self.size = n
        self.leq = leq
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.name = name

    def __repr__(self) -> str:
        return f"SpectralPoset({self.name!r}, size={self.size})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectralPoset):
            return NotImplemented
        return self.size == other.size and bool((self.leq == other.leq).all())

    def __hash__(self) -> int:
        return hash(self.leq.tobytes())

    def dual(self) -> "SpectralPoset":
        return SpectralPoset(self.leq.T, self.labels, name=f"{self.name}^op")

    def down(self, q: int) -> int:
        return mask_of(np.flatnonzero(self.leq[:, q]))

    def up(self, p: int) -> int:
        return mask_of(np.flatnonzero(self.leq[p, :]))

    def edges(self) -> list[tuple[int, int]]:
        """Strict relations ``p < q``."""
        return [(int(p), int(q)) for p, q in zip(*np.nonzero(self.leq)) if p != q]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram: ``p < q`` with nothing strictly between."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        between = (strict.astype(int) @ strict.astype(int)) > 0
        return [(int(p), int(q)) for p, q in zip(*np.nonzero(strict & ~between))]

    def is_maximal(self, p: int) -> bool:
        return int(self.leq[p].sum()) == 1

    def is_minimal(self, p: int) -> bool:
        return int(self.leq[:, p].sum()) == 1

    def is_antichain(self) -> bool:
        return not self.edges()


# -- poset constructors ---------------------------------------------------------------


def poset_from_edges(n: int, edges: Iterable[tuple[int, int]], name: str = "P", labels=None) -> SpectralPoset:
    """Reflexive-transitive closure of ``edges`` (pairs ``p < q``); cycles are rejected."""
    leq = np.eye(n, dtype=bool)
    for p, q in edges:
        if not (0 <= p < n and 0 <= q < n):
            raise ValueError(f"edge {p} < {q} outside 0..{n - 1}")
        leq[p, q] = True
    for k in range(n):
        leq |= leq[:, k : k + 1] & leq[k : k + 1, :]
    if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
        raise ValueError("relation has a cycle")
    return SpectralPoset(leq, labels=labels, name=name)


def chain(k: int) -> SpectralPoset:
    """``0 < 1 < ... < k-1``; ``chain(2)`` models the spectrum of a DVR."""
    return poset_from_edges(k, [(i, i + 1) for i in range(k - 1)], name=f"chain({k})")


def antichain(k: int) -> SpectralPoset:
    return poset_from_edges(k, [], name=f"antichain({k})")


def fence(k: int) -> SpectralPoset:
    """Zigzag ``0 < 1 > 2 < 3 > ...``."""
    edges = [(i, i + 1) if i % 2 == 0 else (i + 1, i) for i in range(k - 1)]
    return poset_from_edges(k, edges, name=f"fence({k})")


def tree(parents: Sequence[int]) -> SpectralPoset:
    """Rooted tree with the root 0 at the bottom; point ``i+1`` sits above ``parents[i]``."""
    n = len(parents) + 1
    for i, p in enumerate(parents):
        if not 0 <= p <= i:
            raise ValueError("each parent must be an earlier point")
    name = "tree(" + ",".join(map(str, parents)) + ")"
    return poset_from_edges(n, [(p, i + 1) for i, p in enumerate(parents)], name=name)


def wedge(k: int) -> SpectralPoset:
    """``k`` minimal points below one maximal point."""
    return poset_from_edges(k + 1, [(i, k) for i in range(k)], name=f"wedge({k})")


def diamond() -> SpectralPoset:
    return poset_from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)], name="diamond")


_POINTS = re.compile(r"^points\s*:\s*(\d+)$")
_EDGE = re.compile(r"^(\d+)\s*<\s*(\d+)$")


def parse_poset(text: str, name: str = "P") -> SpectralPoset:
    """Read the line format ``points: n`` followed by ``i < j`` lines.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [(k + 1, ln) for k, ln in enumerate(lines) if ln]
    if not lines:
        raise ValueError("empty poset description")
    lineno, first = lines[0]
    m = _POINTS.match(first)
    if not m:
        raise ValueError(f"line {lineno}: expected 'points: n'")
    n = int(m.group(1))
    edges = []
    for lineno, ln in lines[1:]:
        e = _EDGE.match(ln)
        if not e:
            raise ValueError(f"line {lineno}: expected 'i < j', got {ln!r}")
        edges.append((int(e.group(1)), int(e.group(2))))
    return poset_from_edges(n, edges, name=name)


def read_poset(path) -> SpectralPoset:
    path = Path(path)
    return parse_poset(path.read_text(), name=path.stem)


def format_poset(p: SpectralPoset) -> str:
    lines = [f"points: {p.size}"] + [f"{a} < {b}" for a, b in p.covers()]
    return "\n".join(lines) + "\n"


def containment_poset(s: Spectrum) -> SpectralPoset:
    """Primes ordered by inclusion."""
    n = len(s)
    leq = np.array([[p.members <= q.members for q in s] for p in s], dtype=bool).reshape(n, n)
    return SpectralPoset(leq, labels=[str(p.ideal.sorted()) for p in s], name=f"Spec({s.ring.label})")


# -- topologies ------------------------------------------------------------------------


def topology_from_subbasis(ground_size: int, subbasis: Iterable[Iterable[int] | int]) -> FiniteTopology:
    """Coarsest topology in which every member of ``subbasis`` is open.

    Subsets may be given as bitmasks or as iterables of points.
    """
    _check_points(ground_size)
    full = (1 << ground_size) - 1
    sub = {s if isinstance(s, int) else mask_of(s) for s in subbasis}
    if any(s & ~full for s in sub):
        raise ValueError("subbasis set outside the ground set")
    basis = {full}
    for s in sub:
        basis |= {b & s for b in basis}
    opens = {0}
    for b in basis:
        opens |= {o | b for o in opens}
    return FiniteTopology(ground_size, opens, validate=False)


def alexandrov_topology(p: SpectralPoset) -> FiniteTopology:
    """Down-closed sets are open; the closure of a point is its up-set."""
    return topology_from_subbasis(p.size, [p.down(q) for q in range(p.size)])


def _vanishing_masks(s: Spectrum) -> list[int]:
    # V(a) for principal ideals; finite intersections of these are exactly V(I) for f.g. I
    r = s.ring
    return [mask_of(p.index for p in s if a in p) for a in r.elements]


def zariski_topology(subject: Spectrum | SpectralPoset) -> FiniteTopology:
    if isinstance(subject, SpectralPoset):
        return alexandrov_topology(subject)
    return topology_from_subbasis(len(subject), [mask_of(basic_open(subject, a)) for a in subject.ring.elements])


def flat_topology(subject: Spectrum | SpectralPoset) -> FiniteTopology:
    """Hochster's inverse topology: opens generated by the sets V(I)."""
    if isinstance(subject, SpectralPoset):
        return alexandrov_topology(subject.dual())
    return topology_from_subbasis(len(subject), _vanishing_masks(subject))


def flat_topology_from_ideals(s: Spectrum, ideals) -> FiniteTopology:
    """Flat topology with subbasis ``V(I)`` over an explicit list of ideals."""
    return topology_from_subbasis(len(s), [mask_of(p.index for p in s if i.members <= p.members) for i in ideals])


def patch_topology(subject: Spectrum | SpectralPoset) -> FiniteTopology:
    """Join of the Zariski and flat topologies."""
    if isinstance(subject, SpectralPoset):
        sub = [subject.down(q) for q in range(subject.size)] + [subject.up(q) for q in range(subject.size)]
        return topology_from_subbasis(subject.size, sub)
    sub = [mask_of(basic_open(subject, a)) for a in subject.ring.elements] + _vanishing_masks(subject)
    return topology_from_subbasis(len(subject), sub)


def join(a: FiniteTopology, b: FiniteTopology) -> FiniteTopology:
    _same_ground(a, b)
    return topology_from_subbasis(a.ground_size, a.opens + b.opens)


def _same_ground(a: FiniteTopology, b: FiniteTopology) -> None:
    if a.ground_size != b.ground_size:
        raise ValueError(f"ground sizes differ: {a.ground_size} != {b.ground_size}")


def topologies_equal(a: FiniteTopology, b: FiniteTopology) -> bool:
    _same_ground(a, b)
    return a.opens == b.opens


def refines(fine: FiniteTopology, coarse: FiniteTopology) -> bool:
    """Every open of ``coarse`` is open in ``fine``."""
    _same_ground(fine, coarse)
    return set(coarse.opens) <= set(fine.opens)


def is_discrete(t: FiniteTopology) -> bool:
    return len(t.opens) == 1 << t.ground_size


def is_hausdorff(t: FiniteTopology) -> bool:
    """Distinct points have disjoint open neighbourhoods.

    The smallest neighbourhoods are the best candidates, so it suffices to
    test those pairwise.
    """
    nb = t.minimal_neighbourhoods()
    return all(nb[x] & nb[y] == 0 for x in range(t.ground_size) for y in range(x + 1, t.ground_size))


def is_t0(t: FiniteTopology) -> bool:
    nb = t.minimal_neighbourhoods()
    return len(set(nb)) == t.ground_size


def specialization_order(t: FiniteTopology) -> SpectralPoset:
    """``p <= q`` iff every open containing ``q`` contains ``p`` (``q`` in the closure of ``p``)."""
    if not is_t0(t):
        raise NotT0Error("specialization preorder of a non-T0 space is not a partial order")
    nb = t.minimal_neighbourhoods()
    n = t.ground_size
    leq = np.array([[bool(nb[q] >> p & 1) for q in range(n)] for p in range(n)], dtype=bool).reshape(n, n)
    return SpectralPoset(leq, name="specialization")


def points_closed(t: FiniteTopology) -> bool:
    return all(t.is_closed(1 << x) for x in range(t.ground_size))
