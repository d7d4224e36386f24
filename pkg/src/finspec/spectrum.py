"""Prime spectra of finite rings, residue fields, and the sets D(a), V(I)."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np
from sympy import primefactors

from .ring import (
    ConsistencyError,
    FiniteRing,
    Ideal,
    RingHom,
    SizeBoundError,
    ideal_generated,
    ideals_bruteforce,
    idempotents,
    is_ideal,
    quotient_ring,
    reduced_ring,
)


@dataclass(frozen=True)
class PrimeIdeal:
    ideal: Ideal
    index: int

    @property
    def members(self) -> frozenset:
        return self.ideal.members

    def __contains__(self, a) -> bool:
        return a in self.ideal


class Spectrum:
    """The prime ideals of a finite ring in a fixed order."""

    def __init__(self, ring: FiniteRing, ideals):
        self.ring = ring
        ordered = sorted({i.members: i for i in ideals}.values(), key=_prime_key)
        self.primes = tuple(PrimeIdeal(i, k) for k, i in enumerate(ordered))

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, k: int) -> PrimeIdeal:
        return self.primes[k]

    def __repr__(self) -> str:
        return f"Spectrum({self.ring.label!r}, {[p.ideal.sorted() for p in self.primes]})"

    def member_sets(self) -> set:
        return {p.members for p in self.primes}

    def index_of(self, ideal: Ideal) -> int:
        for p in self.primes:
            if p.members == ideal.members:
                return p.index
        raise KeyError("ideal is not a prime of this spectrum")


def _prime_key(i: Ideal):
    n = i.ring.size
    outside = min(a for a in range(n) if a not in i.members)
    return (outside, tuple(int(a in i.members) for a in range(n)))


def is_prime_ideal(i: Ideal) -> bool:
    r = i.ring
    if not i.is_proper or not is_ideal(r, i.members):
        return False
    out = np.flatnonzero(~i.mask)
    return not i.mask[r.mul[np.ix_(out, out)]].any()


def spec(r: FiniteRing) -> Spectrum:
    """All prime ideals of ``r``.

    ``R_red`` of a finite ring is a product of fields, one per primitive
    idempotent ``e``; the prime belonging to ``e`` is the set of elements
    whose image is killed by ``e``.
    """
    red, pi = reduced_ring(r)
    nonzero = [e for e in idempotents(red) if e != red.zero]
    primitive = [e for e in nonzero if not any(f != e and red.mul[f, e] == f for f in nonzero)]
    found = []
    for e in primitive:
        members = np.flatnonzero(red.mul[pi.map, e] == red.zero)
        ideal = Ideal(r, frozenset(members.tolist()))
        if not is_prime_ideal(ideal):
            raise ConsistencyError(f"candidate {ideal.sorted()} of {r.label} is not prime")
        found.append(ideal)
    return Spectrum(r, found)


_ZMOD = re.compile(r"^Z/(\d+)$")


def spec_bruteforce_oracle(r: FiniteRing) -> Spectrum:
    """Primes straight from the definition; a test oracle independent of ``spec``.

    Rings with at most 16 elements are handled by scanning every subset;
    ``Z/n`` (recognised by its label) by the prime divisors of ``n``.
    """
    if r.size <= 16:
        found = [i for i in ideals_bruteforce(r) if _prime_by_definition(i)]
        return Spectrum(r, found)
    m = _ZMOD.match(r.label)
    if m and int(m.group(1)) == r.size:
        return Spectrum(r, [ideal_generated(r, [p % r.size]) for p in primefactors(r.size)])
    raise SizeBoundError("oracle needs size <= 16 or a Z/n ring")


def _prime_by_definition(i: Ideal) -> bool:
    r = i.ring
    if r.one in i.members:
        return False
    return all(
        a in i.members or b in i.members
        for a in r.elements
        for b in r.elements
        if int(r.mul[a, b]) in i.members
    )


def is_maximal(i: Ideal) -> bool:
    """Maximality via the field test on the quotient."""
    return quotient_ring(i.ring, i)[0].is_field()


def residue_field(r: FiniteRing, p: PrimeIdeal | Ideal) -> tuple[FiniteRing, RingHom]:
    ideal = p.ideal if isinstance(p, PrimeIdeal) else p
    k, pi = quotient_ring(r, ideal, label=f"k({r.label}; {ideal.sorted()[:4]})")
    if not k.is_field():
        raise ConsistencyError(f"residue ring {k.label} is not a field")
    return k, pi


def basic_open(s: Spectrum, a: int) -> frozenset:
    """D(a): indices of primes not containing ``a``."""
    return frozenset(p.index for p in s if a not in p)


def vanishing_set(s: Spectrum, i: Ideal) -> frozenset:
    """V(I): indices of primes containing ``i``."""
    return frozenset(p.index for p in s if i.members <= p.members)


def pullback(h: RingHom, p: PrimeIdeal | Ideal) -> Ideal:
    ideal = p.ideal if isinstance(p, PrimeIdeal) else p
    return h.preimage(ideal)


def spectrum_map(h: RingHom, source: Spectrum | None = None, target: Spectrum | None = None) -> list[int]:
    """``h*``: for each prime of the target, the index of its pullback in the source spectrum."""
    source = source or spec(h.source)
    target = target or spec(h.target)
    return [source.index_of(pullback(h, q)) for q in target]
