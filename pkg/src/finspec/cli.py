"""Command-line front end.

Exit status: 0 on success, 1 on bad input or exceeded bounds, 2 when a
checked theorem is contradicted (a consistency violation).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ring as ring_mod
from .expr import ParseError, build_ring
from .pointwise import pointwise_localization
from .ring import ConsistencyError, SearchBudgetError, SizeBoundError
from .spectrum import residue_field, spec
from .theorems import corollary9_check, read_corpus_file, run_corpus, theorem2_report
from .topology import (
    TopologySizeError,
    flat_topology,
    is_hausdorff,
    patch_topology,
    points_of,
    read_poset,
    specialization_order,
    zariski_topology,
)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2

TOPOLOGIES = {"zariski": zariski_topology, "flat": flat_topology, "patch": patch_topology}


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _subject(args):
    if getattr(args, "poset", None):
        return read_poset(args.poset)
    if not args.expr:
        raise ValueError("give a ring expression or --poset FILE")
    return build_ring(args.expr)


def spec_data(expr: str) -> dict:
    r = build_ring(expr)
    primes = []
    for p in spec(r):
        k, _ = residue_field(r, p)
        primes.append({"index": p.index, "members": p.ideal.sorted(), "residue_field_size": k.size})
    return {"ring": r.label, "size": r.size, "primes": primes}


def cmd_spec(args) -> int:
    data = spec_data(args.expr)
    lines = [f"Spec({data['ring']}): {len(data['primes'])} prime(s)"]
    for p in data["primes"]:
        lines.append(f"  p{p['index']} = {p['members']}  residue field of size {p['residue_field_size']}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_topology(args) -> int:
    subject = _subject(args)
    space = spec(subject) if hasattr(subject, "mul") else subject
    t = TOPOLOGIES[args.kind](space)
    order = specialization_order(t)
    data = {
        "kind": args.kind,
        "points": t.ground_size,
        "opens": [points_of(o) for o in t.opens],
        "hausdorff": is_hausdorff(t),
        "specialization": [list(e) for e in order.covers()],
    }
    text = "\n".join([
        f"{args.kind} topology on {t.ground_size} point(s)",
        "opens: " + ", ".join("{" + ",".join(map(str, o)) + "}" for o in data["opens"]),
        f"hausdorff: {data['hausdorff']}",
        "specialization: " + (", ".join(f"{a} < {b}" for a, b in data["specialization"]) or "(discrete order)"),
    ])
    _emit(args, data, text)
    return EXIT_OK


def cmd_pointwise(args) -> int:
    r = build_ring(args.expr)
    if args.invert:
        invert = [int(a) for a in args.invert.split(",")]
        bad = [a for a in invert if not 0 <= a < r.size]
        if bad:
            raise ValueError(f"{bad[0]} is not an element of {r.label}")
    else:
        invert = list(r.elements)
    loc = pointwise_localization(r, invert)
    data = {
        "source": r.label,
        "result": loc.result.label,
        "result_size": loc.result.size,
        "eta": loc.eta.map.tolist(),
        "kernel": loc.eta.kernel().sorted(),
        "inverted": {str(s): {"image": loc.eta(s), "pointwise_inverse": b} for s, b in sorted(loc.inverse_of.items())},
        "bijective": loc.eta.is_bijective(),
    }
    text = "\n".join([
        f"source: {r.label} (size {r.size})",
        f"result: {loc.result.label} (size {loc.result.size})",
        f"eta: {data['eta']}",
        f"kernel: {data['kernel']}",
        "inverted: " + ", ".join(f"{s}->{v['image']} (inverse {v['pointwise_inverse']})" for s, v in data["inverted"].items()),
    ])
    _emit(args, data, text)
    return EXIT_OK


def cmd_report(args) -> int:
    subject = _subject(args)
    report = theorem2_report(subject)
    same, maximal = corollary9_check(subject)
    data = report.to_dict()
    data["corollary"] = [same, maximal]
    text = report.to_text() + f"\n  zariski == flat: {same}; all primes maximal: {maximal}"
    _emit(args, data, text)
    return EXIT_OK if report.consistent and same == maximal else EXIT_VIOLATION


def cmd_corpus(args) -> int:
    entries = read_corpus_file(args.file) if args.file else None
    report = run_corpus(entries, seed=args.seed)
    _emit(args, report.to_dict(), report.to_text())
    if report.violations:
        return EXIT_VIOLATION
    return EXIT_INPUT if report.errors else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-size", type=int, default=None, help="ring size bound (default 4096)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="finspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spec", parents=[common], help="list prime ideals")
    p.add_argument("expr")
    p.set_defaults(func=cmd_spec)

    p = sub.add_parser("topology", parents=[common], help="Zariski, flat or patch topology")
    p.add_argument("expr", nargs="?")
    p.add_argument("--poset")
    p.add_argument("--kind", choices=sorted(TOPOLOGIES), default="zariski")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("pointwise", parents=[common], help="pointwise localization")
    p.add_argument("expr")
    p.add_argument("--invert", help="comma-separated elements (default: all)")
    p.set_defaults(func=cmd_pointwise)

    p = sub.add_parser("report", parents=[common], help="separability conditions")
    p.add_argument("expr", nargs="?")
    p.add_argument("--poset")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("corpus", parents=[common], help="run the corpus")
    p.add_argument("--file", help="file with one subject per line")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_size is not None:
        ring_mod.SIZE_BOUND = args.max_size
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ParseError, SizeBoundError, TopologySizeError, SearchBudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
