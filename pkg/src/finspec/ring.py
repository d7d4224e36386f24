"""Finite commutative rings stored as dense Cayley tables.

Elements of a ring of size ``n`` are the integers ``0 .. n-1``.  Every
constructor documents its element encoding:

* ``ring_zmod(n)``: element ``i`` is the residue ``i``.
* ``ring_product(a, b)``: element ``i * b.size + j`` is the pair ``(i, j)``.
* ``ring_poly_quotient(r, f)``: element ``sum(c_k * r.size**k)`` is the
  polynomial ``sum(c_k x**k)`` (low degree first).

All tables are read-only numpy arrays, so rings, ideals and homomorphisms can
be shared freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

#: Largest ring the constructors will build.  The CLI ``--max-size`` flag
#: rebinds this.
SIZE_BOUND = 4096
#: Exhaustive O(n^3) axiom checks are only run up to this size.
AXIOM_CHECK_LIMIT = 64
#: Node budget for homomorphism search.
HOM_NODE_BUDGET = 10**6


class SizeBoundError(ValueError):
    """A construction would exceed ``SIZE_BOUND``."""


class SearchBudgetError(RuntimeError):
    """Homomorphism search visited more nodes than allowed."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed.  This signals a bug, not bad input."""


def _check_bound(size: int) -> None:
    if size > SIZE_BOUND:
        raise SizeBoundError(f"ring of size {size} exceeds the size bound {SIZE_BOUND}")


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.intp)
    arr.flags.writeable = False
    return arr


class FiniteRing:
    """A finite commutative unital ring given by its addition and multiplication tables."""

    def __init__(self, add, mul, zero: int = 0, one: int = 1, label: str = "R", check: bool = True):
        add = _frozen(np.asarray(add))
        mul = _frozen(np.asarray(mul))
        n = add.shape[0]
        if n < 1:
            raise ValueError("a ring has at least one element")
        _check_bound(n)
        if add.shape != (n, n) or mul.shape != (n, n):
            raise ValueError("tables must be square and of equal size")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise ValueError("table entries must be element indices")
        self.size = n
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        if check:
            self.check_axioms()
        hits = add == self.zero
        if not hits.any(axis=1).all():
            raise ValueError("some element has no additive inverse")
        self.neg = _frozen(hits.argmax(axis=1))

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    def check_axioms(self, exhaustive: bool | None = None) -> None:
        """Raise ``ValueError`` if the tables do not define a commutative ring.

        The cubic associativity/distributivity checks run when ``exhaustive``
        is true, or by default when the ring has at most ``AXIOM_CHECK_LIMIT``
        elements.
        """
        n, A, M = self.size, self.add, self.mul
        ar = np.arange(n)
        if (self.zero == self.one) != (n == 1):
            raise ValueError("zero equals one only in the trivial ring")
        if not (A == A.T).all():
            raise ValueError("addition is not commutative")
        if not (M == M.T).all():
            raise ValueError("multiplication is not commutative")
        if not (A[self.zero] == ar).all():
            raise ValueError("zero is not an additive identity")
        if not (M[self.one] == ar).all():
            raise ValueError("one is not a multiplicative identity")
        if not (A == self.zero).any(axis=1).all():
            raise ValueError("some element has no additive inverse")
        if exhaustive is None:
            exhaustive = n <= AXIOM_CHECK_LIMIT
        if not exhaustive:
            return
        i, j, k = ar[:, None, None], ar[None, :, None], ar[None, None, :]
        if not (A[A[i, j], k] == A[i, A[j, k]]).all():
            raise ValueError("addition is not associative")
        if not (M[M[i, j], k] == M[i, M[j, k]]).all():
            raise ValueError("multiplication is not associative")
        if not (M[i, A[j, k]] == A[M[i, j], M[i, k]]).all():
            raise ValueError("multiplication does not distribute over addition")

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def power(self, a: int, k: int) -> int:
        result, base = self.one, int(a)
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def from_int(self, k: int) -> int:
        """The element ``k * 1``."""
        result, base = self.zero, self.one
        if k < 0:
            k, base = -k, int(self.neg[self.one])
        while k:
            if k & 1:
                result = int(self.add[result, base])
            base = int(self.add[base, base])
            k >>= 1
        return result

    def unit_mask(self) -> np.ndarray:
        return (self.mul == self.one).any(axis=1)

    def units(self) -> list[int]:
        return np.flatnonzero(self.unit_mask()).tolist()

    def inverse(self, a: int) -> int | None:
        hits = np.flatnonzero(self.mul[a] == self.one)
        return int(hits[0]) if hits.size else None

    def is_field(self) -> bool:
        if self.is_trivial:
            return False
        units = self.unit_mask()
        return int(units.sum()) == self.size - 1 and not units[self.zero]

    def is_domain(self) -> bool:
        """Nontrivial with no zero divisors."""
        if self.is_trivial:
            return False
        nz = np.flatnonzero(np.arange(self.size) != self.zero)
        return not (self.mul[np.ix_(nz, nz)] == self.zero).any()

    def is_local(self) -> bool:
        """True iff the non-units form an ideal (a unique maximal ideal)."""
        if self.is_trivial:
            return False
        non = np.flatnonzero(~self.unit_mask())
        return bool((~self.unit_mask()[self.add[np.ix_(non, non)]]).all())

    def same_tables(self, other: "FiniteRing") -> bool:
        return (
            self.size == other.size
            and self.zero == other.zero
            and self.one == other.one
            and bool((self.add == other.add).all())
            and bool((self.mul == other.mul).all())
        )


@dataclass(frozen=True)
class Ideal:
    """A set of ring elements closed under addition and multiplication by the ring."""

    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(int(a) for a in self.members))

    def __contains__(self, a) -> bool:
        return int(a) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.size, dtype=bool)
        m[list(self.members)] = True
        return m

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.members

    def issubset(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def sorted(self) -> list[int]:
        return sorted(self.members)


def is_ideal(r: FiniteRing, members: Iterable[int]) -> bool:
    m = np.zeros(r.size, dtype=bool)
    idx = np.fromiter((int(a) for a in members), dtype=np.intp)
    m[idx] = True
    if not m[r.zero]:
        return False
    if not m[r.add[np.ix_(idx, idx)]].all():
        return False
    return bool(m[r.mul[:, idx]].all())


class RingHom:
    """A unital ring homomorphism given by its table of values."""

    def __init__(self, source: FiniteRing, target: FiniteRing, mapping, check: bool = True):
        self.source = source
        self.target = target
        self.map = _frozen(np.asarray(mapping))
        if self.map.shape != (source.size,):
            raise ValueError("map must have one entry per source element")
        if check:
            self.check()

    def __repr__(self) -> str:
        return f"RingHom({self.source.label!r} -> {self.target.label!r})"

    def __call__(self, a: int) -> int:
        return int(self.map[a])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingHom):
            return NotImplemented
        return (
            self.source is other.source
            and self.target is other.target
            and bool((self.map == other.map).all())
        )

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.map.tobytes()))

    def check(self) -> None:
        s, t, f = self.source, self.target, self.map
        if f.min() < 0 or f.max() >= t.size:
            raise ValueError("map values must be target elements")
        if f[s.zero] != t.zero or f[s.one] != t.one:
            raise ValueError("map does not preserve 0 and 1")
        if not (f[s.add] == t.add[f[:, None], f[None, :]]).all():
            raise ValueError("map does not preserve addition")
        if not (f[s.mul] == t.mul[f[:, None], f[None, :]]).all():
            raise ValueError("map does not preserve multiplication")

    def compose(self, first: "RingHom") -> "RingHom":
        """``self ∘ first``."""
        if first.target is not self.source:
            raise ValueError("homomorphisms are not composable")
        return RingHom(first.source, self.target, self.map[first.map], check=False)

    def kernel(self) -> Ideal:
        return Ideal(self.source, frozenset(np.flatnonzero(self.map == self.target.zero).tolist()))

    def image(self) -> frozenset:
        return frozenset(np.unique(self.map).tolist())

    def preimage(self, ideal: Ideal) -> Ideal:
        return Ideal(self.source, frozenset(np.flatnonzero(ideal.mask[self.map]).tolist()))

    def is_injective(self) -> bool:
        return np.unique(self.map).size == self.source.size

    def is_surjective(self) -> bool:
        return np.unique(self.map).size == self.target.size

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and self.is_injective()


def identity_hom(r: FiniteRing) -> RingHom:
    return RingHom(r, r, np.arange(r.size), check=False)


# -- constructors -----------------------------------------------------------


def ring_zmod(n: int) -> FiniteRing:
    """The integers modulo ``n``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    _check_bound(n)
    ar = np.arange(n)
    return FiniteRing(
        (ar[:, None] + ar[None, :]) % n,
        (ar[:, None] * ar[None, :]) % n,
        zero=0,
        one=1 % n,
        label=f"Z/{n}",
    )


def product_with_projections(a: FiniteRing, b: FiniteRing) -> tuple[FiniteRing, RingHom, RingHom]:
    """``a × b`` together with its two projections."""
    nb = b.size
    size = a.size * nb
    _check_bound(size)
    ar = np.arange(size)
    ia, ib = ar // nb, ar % nb
    add = a.add[ia[:, None], ia[None, :]] * nb + b.add[ib[:, None], ib[None, :]]
    mul = a.mul[ia[:, None], ia[None, :]] * nb + b.mul[ib[:, None], ib[None, :]]
    prod = FiniteRing(
        add,
        mul,
        zero=a.zero * nb + b.zero,
        one=a.one * nb + b.one,
        label=f"{a.label} x {b.label}",
        check=False,
    )
    return prod, RingHom(prod, a, ia, check=False), RingHom(prod, b, ib, check=False)


def ring_product(a: FiniteRing, b: FiniteRing) -> FiniteRing:
    return product_with_projections(a, b)[0]


def _format_poly(r: FiniteRing, coeffs: Sequence[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[k])
        if c == r.zero:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if c == r.one and k > 0:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return "+".join(terms) or "0"


def ring_poly_quotient(r: FiniteRing, f: Sequence[int], label: str | None = None) -> FiniteRing:
    """``r[x]/(f)`` for a monic ``f`` given as element indices, constant term first."""
    f = [int(c) for c in f]
    d = len(f) - 1
    if d < 1:
        raise ValueError("polynomial must have degree at least 1")
    if f[-1] != r.one:
        raise ValueError("polynomial must be monic")
    n = r.size
    size = n**d
    _check_bound(size)
    weights = n ** np.arange(d)
    digits = (np.arange(size)[:, None] // weights[None, :]) % n  # (size, d)

    add = np.zeros((size, size), dtype=np.intp)
    for k in range(d):
        col = digits[:, k]
        add += r.add[col[:, None], col[None, :]] * weights[k]

    neg_f = [int(r.neg[c]) for c in f[:d]]
    mul = np.empty((size, size), dtype=np.intp)
    block = max(1, 4_000_000 // (size * (2 * d - 1)))
    for start in range(0, size, block):
        rows = digits[start : start + block]
        acc = np.full((rows.shape[0], size, 2 * d - 1), r.zero, dtype=np.intp)
        for i in range(d):
            for j in range(d):
                term = r.mul[rows[:, i][:, None], digits[:, j][None, :]]
                acc[:, :, i + j] = r.add[acc[:, :, i + j], term]
        # x^d = -(f_0 + ... + f_{d-1} x^{d-1})
        for k in range(2 * d - 2, d - 1, -1):
            top = acc[:, :, k]
            for m in range(d):
                acc[:, :, k - d + m] = r.add[acc[:, :, k - d + m], r.mul[top, neg_f[m]]]
        mul[start : start + block] = (acc[:, :, :d] * weights).sum(axis=2)

    zero = int(r.zero * weights.sum())
    one = int(r.one + r.zero * weights[1:].sum())
    if label is None:
        label = f"{r.label}[x]/({_format_poly(r, f)})"
    return FiniteRing(add, mul, zero=zero, one=one, label=label, check=size <= AXIOM_CHECK_LIMIT)


# -- ideals -----------------------------------------------------------------


def _additive_closure(r: FiniteRing, mask: np.ndarray) -> np.ndarray:
    mask = mask.copy()
    mask[r.zero] = True
    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[r.add[np.ix_(idx, idx)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def _ideal_from_mask(r: FiniteRing, mask: np.ndarray) -> Ideal:
    return Ideal(r, frozenset(np.flatnonzero(mask).tolist()))


def ideal_generated(r: FiniteRing, gens: Iterable[int]) -> Ideal:
    """The smallest ideal containing ``gens``."""
    gens = np.fromiter((int(g) for g in gens), dtype=np.intp)
    mask = np.zeros(r.size, dtype=bool)
    mask[r.zero] = True
    if gens.size:
        mask[r.mul[gens].ravel()] = True
    return _ideal_from_mask(r, _additive_closure(r, mask))


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    return _ideal_from_mask(i.ring, _additive_closure(i.ring, i.mask | j.mask))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    r = i.ring
    a, b = np.array(i.sorted()), np.array(j.sorted())
    return ideal_generated(r, np.unique(r.mul[np.ix_(a, b)]).tolist())


def unit_ideal(r: FiniteRing) -> Ideal:
    return Ideal(r, frozenset(range(r.size)))


def zero_ideal(r: FiniteRing) -> Ideal:
    return Ideal(r, frozenset([r.zero]))


def all_ideals(r: FiniteRing) -> list[Ideal]:
    """Every ideal, found as sums of principal ideals.

    Every ideal of a finite ring is a finite sum of principal ideals, so a
    breadth-first search over sums reaches all of them.
    """
    principal = {}
    for a in r.elements:
        p = ideal_generated(r, [a])
        principal.setdefault(p.members, p)
    found = {zero_ideal(r).members: zero_ideal(r)}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for i in frontier:
            for p in principal.values():
                if p.members <= i.members:
                    continue
                j = ideal_sum(i, p)
                if j.members not in found:
                    found[j.members] = j
                    nxt.append(j)
        frontier = nxt
    return sorted(found.values(), key=lambda i: (len(i), i.sorted()))


def ideals_bruteforce(r: FiniteRing) -> list[Ideal]:
    """Every ideal, by scanning all subsets that contain zero.  Test oracle; size <= 16."""
    n = r.size
    if n > 16:
        raise SizeBoundError("subset scan is limited to rings with at most 16 elements")
    others = [a for a in range(n) if a != r.zero]
    count = 1 << len(others)
    codes = np.arange(count)
    M = np.zeros((count, n), dtype=bool)
    M[:, r.zero] = True
    for bit, a in enumerate(others):
        M[:, a] = (codes >> bit) & 1
    ok = np.ones(count, dtype=bool)
    for a in range(n):
        for b in range(n):
            ok &= ~(M[:, a] & M[:, b] & ~M[:, r.add[a, b]])
            ok &= ~(M[:, b] & ~M[:, r.mul[a, b]])
    return sorted(
        (_ideal_from_mask(r, row) for row in M[ok]),
        key=lambda i: (len(i), i.sorted()),
    )


# -- quotients and derived rings ----------------------------------------------


def quotient_ring(r: FiniteRing, i: Ideal, label: str | None = None) -> tuple[FiniteRing, RingHom]:
    """``r / i`` and the canonical surjection.  Cosets are ordered by their least member."""
    if i.ring is not r:
        raise ValueError("ideal belongs to a different ring")
    members = np.array(i.sorted())
    reps_of = r.add[:, members].min(axis=1)
    reps, idx = np.unique(reps_of, return_inverse=True)
    add = idx[r.add[np.ix_(reps, reps)]]
    mul = idx[r.mul[np.ix_(reps, reps)]]
    if label is None:
        label = f"({r.label})/({','.join(map(str, i.sorted()[:6]))}{',...' if len(i) > 6 else ''})"
    q = FiniteRing(add, mul, zero=idx[r.zero], one=idx[r.one], label=label, check=False)
    return q, RingHom(r, q, idx, check=False)


def nilradical(r: FiniteRing) -> Ideal:
    """Nilpotent elements.  If ``a^k = 0`` for some ``k`` then already ``a^n = 0``."""
    p = np.arange(r.size)
    for _ in range(max(1, math.ceil(math.log2(r.size)) + 1)):
        p = r.mul[p, p]
    return Ideal(r, frozenset(np.flatnonzero(p == r.zero).tolist()))


def reduced_ring(r: FiniteRing) -> tuple[FiniteRing, RingHom]:
    return quotient_ring(r, nilradical(r), label=f"({r.label})_red")


def idempotents(r: FiniteRing) -> list[int]:
    ar = np.arange(r.size)
    return np.flatnonzero(r.mul[ar, ar] == ar).tolist()


def primitive_idempotents(r: FiniteRing) -> list[int]:
    """Atoms of the idempotent order ``e <= f  iff  ef = e``."""
    nonzero = [e for e in idempotents(r) if e != r.zero]
    return [
        e for e in nonzero if not any(f != e and r.mul[f, e] == f for f in nonzero)
    ]


def multiplicative_closure(r: FiniteRing, elems: Iterable[int]) -> frozenset:
    closed = {r.one}
    frontier = set(int(a) for a in elems) - closed
    while frontier:
        closed |= frontier
        nxt = set()
        for a in frontier:
            for b in list(closed):
                c = int(r.mul[a, b])
                if c not in closed:
                    nxt.add(c)
        frontier = nxt
    return frozenset(closed)


def is_multiplicative(r: FiniteRing, s: Iterable[int]) -> bool:
    s = frozenset(int(a) for a in s)
    return r.one in s and all(int(r.mul[a, b]) in s for a in s for b in s)


# -- pointwise inverses and absolute flatness -----------------------------------


def _square_witness(r: FiniteRing, a: int) -> int | None:
    """First ``c`` with ``a = c a^2``, or None."""
    hits = np.flatnonzero(r.mul[:, r.mul[a, a]] == a)
    return int(hits[0]) if hits.size else None


def pointwise_inverse(r: FiniteRing, a: int) -> int | None:
    """The unique ``b`` with ``a = a^2 b`` and ``b = b^2 a``; None when ``a`` is not in ``R a^2``."""
    c = _square_witness(r, a)
    if c is None:
        return None
    return int(r.mul[r.mul[c, c], a])


def is_absolutely_flat(r: FiniteRing) -> bool:
    """Every ``a`` can be written ``a = a^2 s``."""
    ar = np.arange(r.size)
    squares = r.mul[ar, ar]
    return bool((r.mul[:, squares] == ar[None, :]).any(axis=0).all())


def idempotent_generator(r: FiniteRing, gens: Sequence[int]) -> int:
    """An idempotent generating the same ideal as ``gens``.

    Each generator must satisfy ``a = a^2 c`` for some ``c``.  Then ``a c`` is
    idempotent and generates ``(a)``, and two idempotents ``e, f`` combine to
    ``e + f - e f``.
    """
    e = r.zero
    for a in gens:
        c = _square_witness(r, a)
        if c is None:
            raise ValueError(f"generator {a} is not of the form a^2 c in {r.label}")
        ei = int(r.mul[a, c])
        e = int(r.add[r.add[e, ei], r.neg[r.mul[e, ei]]])
    return e


# -- localization -----------------------------------------------------------------


def idempotent_power(r: FiniteRing, t: int) -> int:
    """The idempotent in the cyclic monoid generated by ``t``."""
    p = int(t)
    for _ in range(r.size + 1):
        if r.mul[p, p] == p:
            return p
        p = int(r.mul[p, t])
    raise ConsistencyError("power sequence has no idempotent")


def corner_ring(r: FiniteRing, e: int, label: str | None = None) -> tuple[FiniteRing, RingHom]:
    """The ring ``e R`` with identity ``e`` and the surjection ``a -> e a``."""
    if r.mul[e, e] != e:
        raise ValueError(f"{e} is not idempotent")
    image = r.mul[e]
    elems = np.unique(image)
    pos = np.full(r.size, -1, dtype=np.intp)
    pos[elems] = np.arange(elems.size)
    ring = FiniteRing(
        pos[r.add[np.ix_(elems, elems)]],
        pos[r.mul[np.ix_(elems, elems)]],
        zero=int(pos[r.zero]),
        one=int(pos[e]),
        label=label or f"{e}*({r.label})",
        check=False,
    )
    return ring, RingHom(r, ring, pos[image], check=False)


def localize(r: FiniteRing, s: Iterable[int], label: str | None = None) -> tuple[FiniteRing, RingHom]:
    """``S^-1 R`` for a multiplicative subset ``s``.

    With ``t`` the product of ``s`` and ``e`` the idempotent power of ``t``,
    ``S^-1 R`` is ``e R``: in each local factor ``t`` is either a unit (kept)
    or nilpotent (killed).
    """
    s = sorted(set(int(a) for a in s))
    if not is_multiplicative(r, s):
        raise ValueError("not a multiplicative subset (must contain 1 and be closed under products)")
    t = r.one
    for a in s:
        t = int(r.mul[t, a])
    e = idempotent_power(r, t)
    return corner_ring(r, e, label=label or f"S^-1({r.label})")


def complement(r: FiniteRing, i: Ideal) -> list[int]:
    return [a for a in r.elements if a not in i.members]


# -- homomorphism search -------------------------------------------------------------


def subring_closure(r: FiniteRing, elems: Iterable[int]) -> np.ndarray:
    """Mask of the subring generated by ``elems`` (and 1)."""
    mask = np.zeros(r.size, dtype=bool)
    mask[[r.zero, r.one]] = True
    mask[list(int(a) for a in elems)] = True
    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[r.add[np.ix_(idx, idx)].ravel()] = True
        grown[r.mul[np.ix_(idx, idx)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def ring_generators(r: FiniteRing) -> list[int]:
    """A generating set chosen greedily by largest growth of the generated subring."""
    gens: list[int] = []
    mask = subring_closure(r, gens)
    while not mask.all():
        best, best_mask = None, None
        for a in np.flatnonzero(~mask):
            m = subring_closure(r, gens + [int(a)])
            if best_mask is None or m.sum() > best_mask.sum():
                best, best_mask = int(a), m
                if m.all():
                    break
        gens.append(best)
        mask = best_mask
    return gens


def _propagate(a: FiniteRing, b: FiniteRing, m: np.ndarray) -> np.ndarray | None:
    """Extend a partial map by closure under + and ·; None on a clash."""
    tables = ((a.add, b.add), (a.mul, b.mul))
    while True:
        changed = False
        for ta, tb in tables:
            known = np.flatnonzero(m >= 0)
            imgs = m[known]
            src = ta[np.ix_(known, known)].ravel()
            dst = tb[np.ix_(imgs, imgs)].ravel()
            cur = m[src]
            have = cur >= 0
            if (cur[have] != dst[have]).any():
                return None
            src, dst = src[~have], dst[~have]
            if src.size:
                uniq, first, inv = np.unique(src, return_index=True, return_inverse=True)
                if (dst != dst[first][inv]).any():
                    return None
                m[uniq] = dst[first]
                changed = True
        if not changed:
            return m


def enumerate_homs(
    a: FiniteRing,
    b: FiniteRing,
    limit: int | None = None,
    budget: int | None = None,
) -> list[RingHom]:
    """All unital ring homomorphisms ``a -> b`` (at most ``limit`` of them).

    Backtracks over images of a greedy generating set, propagating each
    assignment through the Cayley tables.
    """
    budget = HOM_NODE_BUDGET if budget is None else budget
    gens = ring_generators(a)
    start = np.full(a.size, -1, dtype=np.intp)
    start[a.zero] = b.zero
    if start[a.one] >= 0 and start[a.one] != b.one:
        return []
    start[a.one] = b.one
    start = _propagate(a, b, start)
    if start is None:
        return []
    found: list[RingHom] = []
    nodes = 0

    def search(k: int, m: np.ndarray) -> bool:
        nonlocal nodes
        if limit is not None and len(found) >= limit:
            return True
        if k == len(gens):
            if (m < 0).any():
                raise ConsistencyError("generators did not determine the homomorphism")
            found.append(RingHom(a, b, m, check=False))
            return False
        g = gens[k]
        candidates = [int(m[g])] if m[g] >= 0 else range(b.size)
        for y in candidates:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetError(f"homomorphism search exceeded {budget} nodes")
            trial = m.copy()
            trial[g] = y
            trial = _propagate(a, b, trial)
            if trial is not None and search(k + 1, trial):
                return True
        return False

    search(0, start)
    return found


def find_isomorphism(a: FiniteRing, b: FiniteRing) -> RingHom | None:
    if a.size != b.size:
        return None
    for h in enumerate_homs(a, b):
        if h.is_bijective():
            return h
    return None


def is_isomorphic(a: FiniteRing, b: FiniteRing) -> bool:
    return find_isomorphism(a, b) is not None
