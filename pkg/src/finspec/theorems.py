"""Evaluate the separability conditions and the absolute-flatness facts on rings and posets.

Every condition in a ``Theorem2Report`` is computed along its own code path;
none is derived from another, so agreement between them is evidence rather
than tautology.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .expr import ParseError, build_ring
from .pointwise import full_pointwise_ring, localization_invariants, verify_stalks
from .ring import (
    ConsistencyError,
    FiniteRing,
    all_ideals,
    complement,
    idempotent_generator,
    idempotents,
    ideal_generated,
    ideal_product,
    is_absolutely_flat,
    localize,
    multiplicative_closure,
    quotient_ring,
    reduced_ring,
    ring_product,
    ring_zmod,
)
from .spectrum import is_maximal, spec, spec_bruteforce_oracle
from .topology import (
    SpectralPoset,
    antichain,
    chain,
    containment_poset,
    diamond,
    fence,
    flat_topology,
    is_hausdorff,
    patch_topology,
    read_poset,
    topologies_equal,
    tree,
    wedge,
    zariski_topology,
)

CONDITIONS = ("i", "iii", "iv", "v", "vi", "vii", "viii", "ix")
RING_ONLY = ("i", "iii")


@dataclass
class Theorem2Report:
    subject: str
    kind: str
    conditions: dict

    @property
    def consistent(self) -> bool:
        values = {v for v in self.conditions.values() if v is not None}
        return len(values) <= 1

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "kind": self.kind,
            "conditions": {k: self.conditions[k] for k in CONDITIONS},
            "consistent": self.consistent,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Theorem2Report":
        return cls(d["subject"], d["kind"], {k: d["conditions"][k] for k in CONDITIONS})

    def to_text(self) -> str:
        shown = {True: "true", False: "false", None: "n/a"}
        lines = [f"{self.subject} ({self.kind})"]
        lines += [f"  ({k}) {shown[self.conditions[k]]}" for k in CONDITIONS]
        lines.append(f"  consistent: {'yes' if self.consistent else 'NO'}")
        return "\n".join(lines)


def _ring_conditions(r: FiniteRing) -> dict:
    s = spec(r)
    zar, flat, patch = zariski_topology(s), flat_topology(s), patch_topology(s)
    return {
        "i": is_absolutely_flat(reduced_ring(r)[0]),
        "iii": all(localize(r, complement(r, p.ideal))[1].is_surjective() for p in s),
        "iv": all(is_maximal(p.ideal) for p in s),
        "v": topologies_equal(patch, zar),
        "vi": is_hausdorff(zar),
        "vii": all(not q.members < p.members for p in s for q in s),
        "viii": is_hausdorff(flat),
        "ix": topologies_equal(patch, flat),
    }


def _poset_conditions(p: SpectralPoset) -> dict:
    zar, flat, patch = zariski_topology(p), flat_topology(p), patch_topology(p)
    return {
        "i": None,
        "iii": None,
        "iv": all(p.is_maximal(x) for x in range(p.size)),
        "v": topologies_equal(patch, zar),
        "vi": is_hausdorff(zar),
        "vii": all(p.is_minimal(x) for x in range(p.size)),
        "viii": is_hausdorff(flat),
        "ix": topologies_equal(patch, flat),
    }


def theorem2_report(subject: FiniteRing | SpectralPoset, label: str | None = None) -> Theorem2Report:
    """All checkable separability conditions on one ring or poset.

    The condition quantifying over every flat epimorphism out of the ring is
    not finitely checkable and is not part of the report; condition (iii) is
    its checkable stand-in.
    """
    if isinstance(subject, FiniteRing):
        return Theorem2Report(label or subject.label, "ring", _ring_conditions(subject))
    if isinstance(subject, SpectralPoset):
        return Theorem2Report(label or subject.name, "poset", _poset_conditions(subject))
    raise TypeError(f"cannot report on {type(subject).__name__}")


def corollary9_check(subject: FiniteRing | SpectralPoset) -> tuple[bool, bool]:
    """(Zariski equals flat, every prime maximal), computed independently."""
    if isinstance(subject, FiniteRing):
        s = spec(subject)
        return (
            topologies_equal(zariski_topology(s), flat_topology(s)),
            all(is_maximal(p.ideal) for p in s),
        )
    return (
        topologies_equal(zariski_topology(subject), flat_topology(subject)),
        all(subject.is_maximal(x) for x in range(subject.size)),
    )


# -- absolute flatness suite ------------------------------------------------------------


@dataclass
class ClaimResult:
    name: str
    status: str  # "pass", "fail" or "vacuous"
    witness: str = ""


@dataclass
class Section2Report:
    subject: str
    claims: list = field(default_factory=list)

    @property
    def failures(self) -> list:
        return [c for c in self.claims if c.status == "fail"]

    def to_dict(self) -> dict:
        return {"subject": self.subject, "claims": [c.__dict__ for c in self.claims]}


def _multiplicative_sets(r: FiniteRing, primes) -> list[tuple[str, frozenset]]:
    sets = [("{1}", frozenset([r.one]))]
    sets += [(f"R - p{p.index}", frozenset(complement(r, p.ideal))) for p in primes]
    sets += [(f"<{a}>^N", multiplicative_closure(r, [a])) for a in r.elements]
    return sets


def section2_suite(r: FiniteRing, product_limit: int = 16) -> Section2Report:
    """Check the absolute-flatness facts that can be instantiated on ``r``."""
    rep = Section2Report(r.label)
    add = rep.claims.append
    flat = is_absolutely_flat(r)
    ideals = all_ideals(r)
    primes = spec(r)

    # every ideal idempotent <=> a = a^2 s for all a <=> every f.g. ideal generated by an idempotent
    idem_ideals = all(ideal_product(i, i).members == i.members for i in ideals)
    idem_gen = all(
        any(ideal_generated(r, [e]).members == i.members for e in idempotents(r)) for i in ideals
    )
    add(ClaimResult(
        "regular_equivalence",
        "pass" if flat == idem_ideals == idem_gen else "fail",
        f"regular={flat} idempotent_ideals={idem_ideals} idempotent_generated={idem_gen}",
    ))

    # stable under quotients and localizations
    if flat:
        bad = [i.sorted() for i in ideals if not is_absolutely_flat(quotient_ring(r, i)[0])]
        add(ClaimResult("quotients_regular", "fail" if bad else "pass", f"ideals {bad}" if bad else ""))
        bad = [name for name, s in _multiplicative_sets(r, primes) if not is_absolutely_flat(localize(r, s)[0])]
        add(ClaimResult("localizations_regular", "fail" if bad else "pass", f"sets {bad}" if bad else ""))
    else:
        add(ClaimResult("quotients_regular", "vacuous"))
        add(ClaimResult("localizations_regular", "vacuous"))

    # local criterion
    local_flat = all(
        is_absolutely_flat(localize(r, complement(r, p.ideal))[0]) for p in primes if is_maximal(p.ideal)
    )
    add(ClaimResult("local_criterion", "pass" if local_flat == flat else "fail",
                    f"regular={flat} all_localizations_regular={local_flat}"))

    # products
    checks = [(ring_product(r, ring_zmod(2)), flat), (ring_product(r, ring_zmod(4)), False)]
    if r.size <= product_limit:
        checks.append((ring_product(r, r), flat))
    bad = [p.label for p, want in checks if is_absolutely_flat(p) != want]
    add(ClaimResult("products", "fail" if bad else "pass", f"{bad}" if bad else ""))

    # regular rings with one of three extra properties are fields
    hyps = {
        "two_idempotents": len(idempotents(r)) == 2,
        "domain": r.is_domain(),
        "local": r.is_local(),
    }
    for name, hyp in hyps.items():
        if flat and not r.is_trivial and hyp:
            add(ClaimResult(f"field_if_{name}", "pass" if r.is_field() else "fail"))
        else:
            add(ClaimResult(f"field_if_{name}", "vacuous"))
    return rep


# -- corpus ----------------------------------------------------------------------------


def default_corpus() -> list[str]:
    """Rings and posets used by the acceptance run."""
    rings = [f"Z/{n}" for n in range(1, 61)]
    rings += [f"GF({q})" for q in (2, 3, 4, 5, 8, 9)]
    rings += [
        "Z/2 x Z/2", "Z/2 x Z/3", "Z/2 x Z/4", "Z/3 x Z/3", "Z/2 x Z/2 x Z/2",
        "Z/4 x Z/4", "Z/2 x GF(4)", "GF(4) x Z/3", "Z/3 x Z/4", "Z/2 x Z/9",
        "GF(4) x GF(4)", "Z/2 x Z/2 x Z/3", "Z/6 x Z/6", "GF(8) x Z/2",
    ]
    rings += [
        "Z/2[x]/(x^2)", "Z/2[x]/(x^3)", "Z/3[x]/(x^2)", "Z/2[x]/(x^2+1)", "Z/4[x]/(x^2)",
        "Z/2[x]/(x^2+x)", "Z/3[x]/(x^2-1)", "Z/4[x]/(x^2+x+1)", "Z/2[x]/(x^3+x)", "Z/5[x]/(x^2)",
        "Z/2[x]/(x^2) x Z/3", "Z/12/(6)", "(Z/4 x Z/4)/(2)", "Z/2[x]/(x^3)/(4)",
    ]
    posets = [f"chain({k})" for k in range(1, 6)]
    posets += [f"antichain({k})" for k in range(2, 6)]
    posets += [f"fence({k})" for k in range(3, 6)]
    posets += ["tree(0,0)", "tree(0,0,0)", "tree(0,0,0,0)", "tree(0,1,1)", "tree(0,1,1,2)", "tree(0,0,1,1)"]
    posets += ["wedge(2)", "wedge(3)", "diamond"]
    return rings + posets


_POSET = re.compile(r"^(chain|antichain|fence|wedge)\((\d+)\)$")
_TREE = re.compile(r"^tree\((\d+(?:,\d+)*)\)$")


def parse_subject(text: str) -> FiniteRing | SpectralPoset:
    """A ring expression, a named poset (``chain(3)``, ``tree(0,0,1)``, ``diamond`` ...),
    or ``file:PATH`` for a poset file."""
    t = "".join(text.split())
    if t.startswith("file:"):
        return read_poset(text.strip()[5:])
    m = _POSET.match(t)
    if m:
        build = {"chain": chain, "antichain": antichain, "fence": fence, "wedge": wedge}[m.group(1)]
        return build(int(m.group(2)))
    m = _TREE.match(t)
    if m:
        return tree([int(x) for x in m.group(1).split(",")])
    if t == "diamond":
        return diamond()
    return build_ring(text)


@dataclass
class SubjectRecord:
    label: str
    kind: str = "error"
    conditions: dict = field(default_factory=dict)
    consistent: bool = True
    corollary: tuple | None = None
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "conditions": self.conditions,
            "consistent": self.consistent,
            "corollary": list(self.corollary) if self.corollary is not None else None,
            "checks": self.checks,
            "violations": self.violations,
            "error": self.error,
        }


@dataclass
class CorpusReport:
    records: list = field(default_factory=list)

    @property
    def violations(self) -> list:
        return [(r.label, v) for r in self.records for v in r.violations]

    @property
    def errors(self) -> list:
        return [r for r in self.records if r.error is not None]

    def counts(self) -> dict:
        kinds = [r.kind for r in self.records]
        return {
            "subjects": len(self.records),
            "rings": kinds.count("ring"),
            "posets": kinds.count("poset"),
            "errors": len(self.errors),
            "violations": len(self.violations),
        }

    def to_dict(self) -> dict:
        return {"counts": self.counts(), "records": [r.to_dict() for r in self.records]}

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            if r.error is not None:
                lines.append(f"ERROR {r.label}: {r.error}")
                continue
            status = "ok" if not r.violations else "VIOLATION"
            value = next((v for v in r.conditions.values() if v is not None), None)
            lines.append(f"{status:9s} {r.kind:5s} {r.label}  conditions={value}")
            lines += [f"    {v}" for v in r.violations]
        c = self.counts()
        lines.append(
            f"{c['subjects']} subjects ({c['rings']} rings, {c['posets']} posets), "
            f"{c['errors']} errors, {c['violations']} violations"
        )
        return "\n".join(lines)


def _ring_checks(r: FiniteRing, rec: SubjectRecord, rng, pointwise_limit: int, stalk_limit: int) -> None:
    if r.size <= 16:
        agree = spec(r).member_sets() == spec_bruteforce_oracle(r).member_sets()
        rec.checks["spectrum_oracle"] = agree
    for claim in section2_suite(r).claims:
        rec.checks[claim.name] = claim.status
    if r.size <= pointwise_limit:
        loc = full_pointwise_ring(r)
        for name, ok in localization_invariants(loc, full=True).items():
            rec.checks[f"pointwise {name}"] = ok
        if r.size <= stalk_limit:
            rec.checks["stalks"] = len(verify_stalks(loc)) == len(spec(r))
    if is_absolutely_flat(r) and r.size > 1:
        ok = True
        for _ in range(3):
            gens = rng.integers(0, r.size, size=int(rng.integers(1, 4))).tolist()
            e = idempotent_generator(r, gens)
            ok &= int(r.mul[e, e]) == e and ideal_generated(r, [e]).members == ideal_generated(r, gens).members
        rec.checks["idempotent_generator"] = ok


def evaluate_subject(label: str, subject, seed: int = 0, pointwise_limit: int = 64, stalk_limit: int = 36) -> SubjectRecord:
    rec = SubjectRecord(label)
    try:
        report = theorem2_report(subject, label=label)
        rec.kind = report.kind
        rec.conditions = report.to_dict()["conditions"]
        rec.consistent = report.consistent
        if not report.consistent:
            rec.violations.append(f"conditions disagree: {rec.conditions}")
        rec.corollary = corollary9_check(subject)
        if rec.corollary[0] != rec.corollary[1]:
            rec.violations.append(f"Zariski=flat is {rec.corollary[0]} but all-maximal is {rec.corollary[1]}")
        if isinstance(subject, FiniteRing):
            seq = [seed, sum(label.encode())]
            _ring_checks(subject, rec, np.random.default_rng(seq), pointwise_limit, stalk_limit)
            bad = [k for k, v in rec.checks.items() if v is False or v == "fail"]
            rec.violations += [f"check failed: {k}" for k in bad]
            cross = theorem2_report(containment_poset(spec(subject)))
            if any(cross.conditions[k] != report.conditions[k] for k in CONDITIONS[2:]):
                rec.violations.append("ring and spectrum-poset reports differ")
    except ConsistencyError as exc:
        rec.violations.append(f"internal consistency failure: {exc}")
    return rec


def run_corpus(entries=None, seed: int = 0, pointwise_limit: int = 64, stalk_limit: int = 36) -> CorpusReport:
    """Evaluate every entry; parse errors are recorded and the run continues."""
    entries = default_corpus() if entries is None else list(entries)
    report = CorpusReport()
    for text in entries:
        try:
            subject = parse_subject(text)
        except (ParseError, ValueError, OSError) as exc:
            report.records.append(SubjectRecord(text.strip(), error=str(exc)))
            continue
        label = subject.label if isinstance(subject, FiniteRing) else subject.name
        report.records.append(evaluate_subject(label, subject, seed, pointwise_limit, stalk_limit))
    return report


def read_corpus_file(path) -> list[str]:
    lines = Path(path).read_text().splitlines()
    return [ln.split("#", 1)[0].strip() for ln in lines if ln.split("#", 1)[0].strip()]
