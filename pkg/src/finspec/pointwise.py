"""Pointwise inverses adjoined to finite rings.

The universal ring ``S^(-1) R`` is classically a quotient of a polynomial ring
in one variable ``x_s`` per ``s`` in ``S``, modulo ``s x_s^2 - x_s`` and
``s^2 x_s - s``.  For a finite ring there is a closed form.  Split ``R`` into
local factors along its primitive idempotents.  In a local factor ``s`` is a
unit or nilpotent:

* unit: the relations are solved by ``x_s = s^-1`` and the factor is unchanged;
* nilpotent, say ``s^k = 0``: ``s = s^2 x_s`` gives ``s = s^k x_s^(k-1) = 0``,
  and then ``x_s = s x_s^2 = 0``.  The factor becomes ``R_i / (s)``.

So ``S^(-1) R`` for one element is ``R / (s f)`` where ``f`` is the sum of the
primitive idempotents on which ``s`` is not a unit, and ``eta`` is the
quotient map.  ``universal_property_check`` tests this per instance against an
exhaustive homomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ring import (
    ConsistencyError,
    FiniteRing,
    Ideal,
    RingHom,
    complement,
    corner_ring,
    enumerate_homs,
    find_isomorphism,
    ideal_generated,
    identity_hom,
    is_absolutely_flat,
    localize,
    nilradical,
    pointwise_inverse,
    primitive_idempotents,
    quotient_ring,
)
from .spectrum import Spectrum, basic_open, pullback, residue_field, spec, spectrum_map, vanishing_set
from .topology import flat_topology, is_hausdorff, mask_of, zariski_topology


class UniversalPropertyViolation(ConsistencyError):
    """A homomorphism did not factor uniquely through a pointwise localization."""


class StalkError(ConsistencyError):
    pass


@dataclass(frozen=True, eq=False)
class PointwiseLocalization:
    source: FiniteRing
    inverted: frozenset
    result: FiniteRing
    eta: RingHom
    inverse_of: dict = field(default_factory=dict)


def local_decomposition(r: FiniteRing) -> list[int]:
    """Primitive idempotents of ``r``, each checked to cut out a local ring."""
    prims = primitive_idempotents(r)
    total = r.zero
    for e in prims:
        if not corner_ring(r, e)[0].is_local():
            raise ConsistencyError(f"factor {e}*R of {r.label} is not local")
        total = int(r.add[total, e])
    if prims and total != r.one:
        raise ConsistencyError("primitive idempotents do not sum to 1")
    return prims


def _unit_in_factor(r: FiniteRing, e: int, a: int) -> int | None:
    """Inverse of ``e a`` inside ``e R``, or None."""
    hits = np.flatnonzero(r.mul[r.mul[e, a]] == e)
    return int(r.mul[e, hits[0]]) if hits.size else None


def adjoin_pointwise_inverse(r: FiniteRing, s: int) -> PointwiseLocalization:
    """The universal ring map out of ``r`` under which ``s`` gets a pointwise inverse."""
    s = int(s)
    killed, inv = [], r.zero
    for e in local_decomposition(r):
        u = _unit_in_factor(r, e, s)
        if u is not None:
            inv = int(r.add[inv, u])
            continue
        es = int(r.mul[e, s])
        if r.power(es, r.size) != r.zero:
            raise ConsistencyError(f"{es} is neither a unit nor nilpotent in its local factor")
        killed.append(es)
    kill = ideal_generated(r, killed)
    if len(kill) == 1:
        result, eta = r, identity_hom(r)
    else:
        result, eta = quotient_ring(r, kill, label=f"({r.label})<{s}^(-1)>")
    return PointwiseLocalization(r, frozenset([s]), result, eta, {s: eta(inv)})


def pointwise_localization(r: FiniteRing, s_set) -> PointwiseLocalization:
    """Adjoin pointwise inverses of every element of ``s_set`` in turn.

    Each step adjoins the image of the next element in the ring built so far;
    the composite map is recorded as ``eta``.
    """
    order = sorted(set(int(a) for a in s_set))
    eta = identity_hom(r)
    pushed: dict[int, int] = {}
    for s in order:
        step = adjoin_pointwise_inverse(eta.target, eta(s))
        pushed = {k: step.eta(v) for k, v in pushed.items()}
        pushed[s] = step.inverse_of[eta(s)]
        eta = step.eta.compose(eta)
    result = eta.target
    inverse_of = {}
    for s in order:
        b = pointwise_inverse(result, eta(s))
        if b is None or b != pushed[s]:
            raise ConsistencyError(f"image of {s} has no matching pointwise inverse")
        inverse_of[s] = b
    return PointwiseLocalization(r, frozenset(order), result, eta, inverse_of)


def full_pointwise_ring(r: FiniteRing) -> PointwiseLocalization:
    """``R^(-1) R``: every element gets a pointwise inverse; the result is absolutely flat."""
    loc = pointwise_localization(r, r.elements)
    if not is_absolutely_flat(loc.result):
        raise ConsistencyError(f"pointwise ring of {r.label} is not absolutely flat")
    return loc


def universal_property_check(loc: PointwiseLocalization, phi: RingHom) -> RingHom | None:
    """The unique ``psi`` with ``phi = psi ∘ eta``.

    Returns None when some ``phi(s)`` lacks a pointwise inverse (the universal
    property then says nothing).  Raises ``UniversalPropertyViolation`` if the
    number of factorizations is not exactly one.
    """
    if phi.source is not loc.source:
        raise ValueError("phi must start at the localized ring")
    if any(pointwise_inverse(phi.target, phi(s)) is None for s in loc.inverted):
        return None
    matches = [
        psi for psi in enumerate_homs(loc.result, phi.target)
        if (psi.map[loc.eta.map] == phi.map).all()
    ]
    if len(matches) != 1:
        raise UniversalPropertyViolation(
            f"{len(matches)} factorizations of {phi} through {loc.result.label}"
        )
    return matches[0]


@dataclass(frozen=True)
class StalkRecord:
    prime: int               # index in Spec(result)
    source_prime: tuple      # members of the pullback prime of the source ring
    stalk_size: int
    residue_size: int
    isomorphic: bool


def verify_stalks(loc: PointwiseLocalization) -> list[StalkRecord]:
    """Check that every stalk of ``R^(-1) R`` is a field isomorphic to the residue field below it."""
    r, target = loc.source, loc.result
    records = []
    for q in spec(target):
        p = pullback(loc.eta, q)
        stalk, to_stalk = localize(target, complement(target, q.ideal), label=f"stalk({target.label})")
        if not stalk.is_field():
            raise StalkError(f"stalk at prime {q.index} of {target.label} is not a field")
        composed = to_stalk.compose(loc.eta)
        # the image of R in the stalk is a domain whose fraction field is the stalk
        image = sorted(composed.image())
        if len(image) != stalk.size:
            raise StalkError("image of R in the stalk is a proper subring of a finite field")
        kappa, _ = residue_field(r, p)
        iso = find_isomorphism(stalk, kappa)
        if iso is None:
            raise StalkError(f"stalk at prime {q.index} is not isomorphic to the residue field")
        records.append(StalkRecord(q.index, tuple(p.sorted()), stalk.size, kappa.size, True))
    return records


def localization_invariants(loc: PointwiseLocalization, full: bool = False) -> dict[str, bool]:
    """Structural facts every pointwise localization of a finite ring must satisfy.

    With ``full`` set, the stronger facts that hold for ``R^(-1) R`` are
    included as well.
    """
    r, res, eta = loc.source, loc.result, loc.eta
    src_spec, res_spec = spec(r), spec(res)
    nil = nilradical(r)
    kernel = eta.kernel()
    out = {}
    pulled = spectrum_map(eta, src_spec, res_spec)
    out["spectrum_bijection"] = sorted(pulled) == list(range(len(src_spec)))
    out["kernel_nilpotent"] = kernel.members <= nil.members
    out["trivial_iff"] = res.is_trivial == r.is_trivial
    out["surjective"] = eta.is_surjective()
    out["inverses"] = all(pointwise_inverse(res, eta(s)) == b for s, b in loc.inverse_of.items())
    zar, flat = zariski_topology(res_spec), flat_topology(res_spec)
    clopen = True
    for s, b in loc.inverse_of.items():
        v = mask_of(vanishing_set(res_spec, ideal_generated(res, [eta(s)])))
        d = mask_of(basic_open(res_spec, res.sub(res.one, int(res.mul[eta(s), b]))))
        clopen &= v == d
        for t in (zar, flat):
            clopen &= t.is_open(v) and t.is_closed(v)
    out["clopen_fibres"] = clopen
    if full:
        out["kernel_is_nilradical"] = kernel.members == nil.members
        out["absolutely_flat"] = is_absolutely_flat(res)
        out["hausdorff_zariski"] = is_hausdorff(zar)
        out["hausdorff_flat"] = is_hausdorff(flat)
        out["bijective_iff_flat"] = eta.is_bijective() == is_absolutely_flat(r)
    return out


def induced_hom(f: RingHom, left: PointwiseLocalization, right: PointwiseLocalization) -> RingHom:
    """The unique ``g`` with ``g ∘ eta_left = eta_right ∘ f`` between full pointwise rings."""
    target = right.eta.compose(f)
    matches = [
        g for g in enumerate_homs(left.result, right.result)
        if (g.map[left.eta.map] == target.map).all()
    ]
    if len(matches) != 1:
        raise UniversalPropertyViolation(f"{len(matches)} induced maps for {f}")
    return matches[0]
