"""Command-line front end: JSON documents in, verdicts and documents out.

Exit codes: 0 verdict true / all cases pass, 1 verdict false / failure found,
2 usage or input error, 3 resource cap exceeded.  Output is canonical, so a
rerun on identical input produces byte-identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import FuzzyFamily
from .covers import (
    is_compact,
    is_strongly_compact,
    minimal_additive_cover_search,
    minimal_subcover_search,
)
from .documents import (
    SpaceDocument,
    dumps_canonical,
    loads_document,
    parse_family_document,
    parse_map_document,
    parse_metric_document,
    parse_space_document,
    space_document_to_obj,
)
from .errors import InputError, PreconditionError, ResourceLimitError
from .maps import continuity_counterexample
from .oracles import (
    DEFAULT_ORACLE_OPENS,
    brute_force_compactness,
    brute_force_strong_compactness,
)
from .product import product
from .suites import SUITES, render_report, run_suite
from .topology import (
    DEFAULT_MAX_OPENS,
    Topology,
    check_hausdorff,
    clopens,
    generate_from_subbase,
    is_large_subbase,
    is_zero_dimensional,
    metric_ball_family,
    metric_induced,
    topology_violation,
)

DEFAULT_MAX_NODES = 1_000_000

CHECK_KINDS = (
    "topology",
    "compact",
    "strong-compact",
    "hausdorff",
    "zerodim",
    "stone",
    "large-subbase",
)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc}") from None


def _space_document(path: str) -> SpaceDocument:
    return parse_space_document(loads_document(_read_input(path)))


def _topology_from(doc: SpaceDocument, what: str) -> Topology:
    if doc.kind != "opens":
        raise InputError(f"{what} requires a document with explicit opens")
    violation = topology_violation(doc.family)
    if violation is not None:
        raise InputError(f"{what} requires a valid topology: {violation}")
    return Topology(doc.carrier, doc.chain, doc.family)


def _emit(obj: dict) -> None:
    sys.stdout.write(dumps_canonical(obj))


# -- subcommands -------------------------------------------------------------------


def _cmd_gen(args) -> int:
    doc = _space_document(args.input)
    max_opens = args.max_opens or doc.caps.get("max_opens") or DEFAULT_MAX_OPENS
    topology = generate_from_subbase(doc.family, max_size=max_opens)
    out = SpaceDocument(doc.chain, doc.carrier, "opens", topology.opens, doc.name, doc.caps)
    _emit(space_document_to_obj(out))
    return 0


def _zerodim_witness(topology: Topology) -> list[int] | None:
    clo = clopens(topology)
    for o in topology.opens:
        acc = topology.zero
        for c in clo:
            if c.leq(o):
                acc = acc.join(c)
        if acc != o:
            return list(o.values)
    return None


def _large_subbase_witness(family: FuzzyFamily) -> dict | None:
    present = {m.values for m in family.members}
    for m in family.members:
        for k in range(2, family.chain.n + 1):
            multiple = m.scaled(k)
            if multiple.values not in present:
                return {
                    "member": list(m.values),
                    "multiplicity": k,
                    "missing": list(multiple.values),
                }
    return None


def _cmd_check(args) -> int:
    doc = _space_document(args.input)
    kind = args.kind
    report: dict = {"check": kind}

    if kind == "topology":
        if doc.kind != "opens":
            raise InputError("check topology requires a document with explicit opens")
        violation = topology_violation(doc.family)
        report["verdict"] = violation is None
        if violation is not None:
            report["witness"] = violation
    elif kind == "large-subbase":
        report["verdict"] = is_large_subbase(doc.family)
        if not report["verdict"]:
            report["witness"] = _large_subbase_witness(doc.family)
    else:
        topology = _topology_from(doc, f"check {kind}")
        if kind in ("compact", "strong-compact"):
            strong = kind == "strong-compact"
            if args.oracle:
                cap = args.max_opens or DEFAULT_ORACLE_OPENS
                oracle = (
                    brute_force_strong_compactness(topology, max_opens=cap)
                    if strong
                    else brute_force_compactness(topology, max_opens=cap)
                )
                report["verdict"] = oracle.compact
                report["method"] = "brute-force"
                report["covers_checked"] = oracle.covers_checked
                if oracle.counterexample is not None:
                    report["witness"] = [list(o.values) for o in oracle.counterexample]
            else:
                report["verdict"] = (
                    is_strongly_compact(topology) if strong else is_compact(topology)
                )
                report["method"] = "finite-model-criterion"
        elif kind == "hausdorff":
            separation = check_hausdorff(topology)
            report["verdict"] = separation.hausdorff
            if separation.hausdorff:
                report["witnesses"] = [
                    {
                        "pair": [topology.carrier.label(x), topology.carrier.label(y)],
                        "first": list(ox.values),
                        "second": list(oy.values),
                    }
                    for (x, y), (ox, oy) in separation.witnesses
                ]
            else:
                x, y = separation.failing_pair
                report["witness"] = {
                    "pair": [topology.carrier.label(x), topology.carrier.label(y)]
                }
        elif kind == "zerodim":
            report["verdict"] = is_zero_dimensional(topology)
            if not report["verdict"]:
                report["witness"] = _zerodim_witness(topology)
        elif kind == "stone":
            compact = is_compact(topology)
            hausdorff = check_hausdorff(topology).hausdorff
            zerodim = is_zero_dimensional(topology)
            report["verdict"] = compact and hausdorff and zerodim
            report["compact"] = compact
            report["hausdorff"] = hausdorff
            report["zerodim"] = zerodim

    _emit(report)
    return 0 if report["verdict"] else 1


def _cmd_product(args) -> int:
    docs = [_space_document(path) for path in args.inputs]
    factors = [_topology_from(doc, "product") for doc in docs]
    max_opens = args.max_opens or DEFAULT_MAX_OPENS
    space = product(factors, max_opens=max_opens)
    if args.subbase_only:
        out = SpaceDocument(space.chain, space.carrier, "subbase", space.subbase)
    else:
        out = SpaceDocument(space.chain, space.carrier, "opens", space.topology().opens)
    _emit(space_document_to_obj(out))
    return 0


def _cmd_mincover(args) -> int:
    doc = parse_family_document(loads_document(_read_input(args.input)))
    search = minimal_additive_cover_search(
        doc.family, max_nodes=args.max_nodes or DEFAULT_MAX_NODES
    )
    report: dict = {"chain": doc.chain.n, "points": list(doc.carrier.points)}
    if search.certificate is None:
        report["feasible"] = False
        _emit(report)
        return 1
    report["feasible"] = True
    report["entries"] = [
        {"vector": list(member.values), "multiplicity": mult}
        for member, mult in search.certificate.entries
    ]
    report["total"] = search.certificate.total_multiplicity
    _emit(report)
    return 0


def _cmd_subcover(args) -> int:
    doc = parse_family_document(loads_document(_read_input(args.input)))
    search = minimal_subcover_search(
        doc.family, max_nodes=args.max_nodes or DEFAULT_MAX_NODES
    )
    report: dict = {"chain": doc.chain.n, "points": list(doc.carrier.points)}
    if search.subcover is None:
        report["feasible"] = False
        _emit(report)
        return 1
    report["feasible"] = True
    report["family"] = [list(m.values) for m in search.subcover.members]
    report["size"] = len(search.subcover)
    _emit(report)
    return 0


def _cmd_metric(args) -> int:
    doc = parse_metric_document(loads_document(_read_input(args.input)))
    if args.subbase_only:
        balls = metric_ball_family(doc.metric, doc.centers, doc.radii)
        out = SpaceDocument(doc.metric.chain, doc.metric.carrier, "subbase", balls, doc.name)
    else:
        topology = metric_induced(
            doc.metric, doc.centers, doc.radii, max_size=args.max_opens or DEFAULT_MAX_OPENS
        )
        out = SpaceDocument(doc.metric.chain, doc.metric.carrier, "opens", topology.opens, doc.name)
    _emit(space_document_to_obj(out))
    return 0


def _cmd_continuity(args) -> int:
    base_dir = None if args.input == "-" else Path(args.input).parent
    doc = parse_map_document(loads_document(_read_input(args.input)), base_dir=base_dir)
    domain = _topology_from(doc.domain, "continuity domain")
    codomain = _topology_from(doc.codomain, "continuity codomain")
    witness = continuity_counterexample(doc.map, domain, codomain)
    report: dict = {"check": "continuity", "verdict": witness is None}
    if witness is not None:
        report["witness"] = list(witness.values)
    _emit(report)
    return 0 if witness is None else 1


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.seed, args.cases)
    sys.stdout.write(render_report(report))
    return 0 if report.all_passed else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvtop",
        description="Exact workbench for finite MV-topological spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="input document path, or - for stdin")

    p = sub.add_parser("gen", help="generate a topology from a subbase document")
    add_input(p)
    p.add_argument("--max-opens", type=int, default=None, help="opens size cap")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="decide a property of a space document")
    p.add_argument("kind", choices=CHECK_KINDS)
    add_input(p)
    p.add_argument("--oracle", action="store_true", help="force brute-force compactness")
    p.add_argument("--max-opens", type=int, default=None, help="oracle opens cap")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("product", help="build the product of space documents")
    p.add_argument("inputs", nargs="+", help="factor space documents")
    p.add_argument("--subbase-only", action="store_true", help="emit the canonical subbase")
    p.add_argument("--max-opens", type=int, default=None, help="opens size cap")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("mincover", help="least-total additive cover of a family document")
    add_input(p)
    p.add_argument("--max-nodes", type=int, default=None, help="solver node cap")
    p.set_defaults(func=_cmd_mincover)

    p = sub.add_parser("subcover", help="smallest covering subfamily of a family document")
    add_input(p)
    p.add_argument("--max-nodes", type=int, default=None, help="solver node cap")
    p.set_defaults(func=_cmd_subcover)

    p = sub.add_parser("metric", help="build the topology induced by a metric document")
    add_input(p)
    p.add_argument("--subbase-only", action="store_true", help="emit the ball family")
    p.add_argument("--max-opens", type=int, default=None, help="opens size cap")
    p.set_defaults(func=_cmd_metric)

    p = sub.add_parser("continuity", help="check a map document for continuity")
    add_input(p)
    p.set_defaults(func=_cmd_continuity)

    p = sub.add_parser("verify", help="run a randomized verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=20)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
