"""Command-line front end, JSON persistence, and DIMACS CNF export.

The family document is a small JSON object with a fixed field order
(format_version, source, labels, maps, claimed_properties, notes) so that
serializing the same input twice gives byte-identical text.  CNF export maps
the vertex of sorted rank i to DIMACS variable i + 1 and encodes each partial
map as the single clause that is false exactly on the colorings containing
it, so the formula is satisfiable iff the family admits an avoiding coloring.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Sequence

from . import analysis, constructions, search
from .constructions import GadgetOutput
from .core import Family, make_partial_map
from .errors import DpcoverError, EmptyMapPresentError

FORMAT_VERSION = "1"


def serialize(obj: GadgetOutput | Family) -> str:
    """Deterministic JSON text for a gadget output or a bare family."""
    if isinstance(obj, Family):
        obj = GadgetOutput(obj, {}, "user:family")
    doc = {
        "format_version": FORMAT_VERSION,
        "source": obj.source,
        "labels": {name: obj.labels[name] for name in sorted(obj.labels)},
        "maps": [[[v, b] for v, b in m.entries] for m in obj.family.maps],
        "claimed_properties": obj.claimed_properties,
        "notes": {k: obj.notes[k] for k in sorted(obj.notes)},
    }
    return json.dumps(doc, indent=2) + "\n"


def parse(text: str) -> GadgetOutput:
    """Inverse of serialize; raises DpcoverError subclasses on bad content."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(
            f"unsupported format_version {doc.get('format_version')!r}"
        )
    maps = [
        make_partial_map([(int(v), int(b)) for v, b in entry_list])
        for entry_list in doc.get("maps", [])
    ]
    family = Family.of(maps)
    labels = {str(k): int(v) for k, v in doc.get("labels", {}).items()}
    claims = list(doc.get("claimed_properties", []))
    notes = {str(k): str(v) for k, v in doc.get("notes", {}).items()}
    return GadgetOutput(family, labels, str(doc.get("source", "")), claims, notes)


def export_cnf(family: Family) -> str:
    """DIMACS CNF text; variable i + 1 is the vertex of sorted rank i.

    Each map contributes one clause: the literal for (x, b) is positive when
    b = 0 and negative when b = 1, so the clause fails exactly on assignments
    whose coloring (variable true = color 1) contains the map.
    """
    if not len(family):
        raise ValueError("cannot export an empty family")
    universe = family.universe
    rank = {v: i for i, v in enumerate(universe)}
    lines = ["c forbidden partial assignment family, one clause per map"]
    for v in universe:
        lines.append(f"c variable {rank[v] + 1} = vertex {v}")
    lines.append(f"p cnf {len(universe)} {len(family)}")
    for m in family.maps:
        if not len(m):
            raise EmptyMapPresentError("the empty map has no clause encoding")
        literals = [
            (rank[v] + 1) if b == 0 else -(rank[v] + 1) for v, b in m.entries
        ]
        lines.append(" ".join(str(lit) for lit in literals) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Subcommand plumbing.
# ---------------------------------------------------------------------------

_PLAIN_GADGETS = {
    "k43": constructions.k43_cover,
    "k54-neq": constructions.k54_neq_cover,
    "k54-eq": constructions.k54_eq_cover,
    "four-uniform-10": constructions.four_uniform_10,
    "nine-edge": constructions.nine_edge_gadget,
    "copy": lambda: constructions.copy_gadget((0, 1, 2), (3, 4, 5)),
    "two-edge": constructions.two_edge_gadget,
    "five-uniform-17": constructions.five_uniform_17,
}

_PARAMETRIC_GADGETS = {
    "binary": constructions.binary_family,
    "parity": constructions.parity_gadget,
    "unary-even": constructions.unary_upper_even,
    "double-unary": constructions.double_unary_gadget,
    "lifted-cover": lambda r: _lifted(r),
}

GADGET_NAMES = sorted(_PLAIN_GADGETS) + sorted(_PARAMETRIC_GADGETS)


def _lifted(r: int) -> GadgetOutput:
    if r < 3:
        raise ValueError("lifted-cover needs r >= 3")
    if (r - 1) % 2 == 0:
        base = constructions.unary_upper_even(r - 1).family
    else:
        base = constructions.double_unary_gadget(r - 1).family
    return constructions.lift_to_cover(base)


def _read_document(path: str) -> GadgetOutput:
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse(handle.read())


def _write_text(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _profile_line(family: Family) -> str:
    profile = analysis.classify(family)
    uniformity = profile.uniformity if profile.uniformity is not None else "mixed"
    if profile.cover_of is not None:
        cover = f"yes(edges={len(profile.cover_of.edges)})"
    else:
        reason, domain = profile.cover_violation
        cover = f"no({reason}@{list(domain)})"
    return (
        f"profile: maps={profile.map_count} universe={profile.universe_size}"
        f" uniformity={uniformity} unary={'yes' if profile.is_unary else 'no'}"
        f" binary={'yes' if profile.is_binary else 'no'} cover={cover}"
    )


def _cmd_construct(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    name = args.gadget
    if name in _PLAIN_GADGETS:
        if args.r is not None:
            parser.error(f"gadget {name} takes no --r")
        gadget = _PLAIN_GADGETS[name]()
    else:
        if args.r is None:
            parser.error(f"gadget {name} requires --r")
        gadget = _PARAMETRIC_GADGETS[name](args.r)
    _write_text(serialize(gadget), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    doc = _read_document(args.file)
    out.write(_profile_line(doc.family) + "\n")
    failures = 0
    if args.claims:
        results = analysis.check_claims(doc.family, doc.claimed_properties)
        for result in results:
            if result.ok:
                out.write(f"ok {result.kind}\n")
            else:
                out.write(f"FAIL {result.kind}: {result.message}\n")
                failures += 1
        out.write(f"claims: {len(results)} checked, {failures} failed\n")
    out.write("verified\n" if not failures else "violations found\n")
    return 0 if not failures else 1


def _cmd_color(args: argparse.Namespace, out: IO[str]) -> int:
    doc = _read_document(args.file)
    family = doc.family
    if args.sample is not None:
        report = analysis.sample_noncolorability(
            family, trials=args.sample, seed=args.seed
        )
        out.write(
            f"sampled: trials={report.trials} seed={report.seed}"
            f" counterexamples={report.counterexamples}\n"
        )
        if report.first_counterexample is not None:
            bits = "".join(
                str(report.first_counterexample.value(v)) for v in family.universe
            )
            out.write(f"first-counterexample: {bits}\n")
        return 0
    report = analysis.find_coloring(
        family, count=args.count, workers=args.workers
    )
    if args.count:
        out.write(
            f"colorings: {report.coloring_count} of {report.enumerated}\n"
        )
    elif report.colorable:
        bits = "".join(str(report.witness.value(v)) for v in family.universe)
        out.write(f"colorable: witness={bits}\n")
    else:
        out.write(f"non-colorable: enumerated={report.enumerated}\n")
    return 0


def _cmd_weight(args: argparse.Namespace, out: IO[str]) -> int:
    doc = _read_document(args.file)
    out.write(str(analysis.weight(doc.family)) + "\n")
    return 0


def _cmd_parity(args: argparse.Namespace, out: IO[str]) -> int:
    doc = _read_document(args.file)
    subset = tuple(int(v) for v in args.set.split(",") if v != "")
    residual = analysis.parity_identity(doc.family, subset)
    out.write(f"lhs: {residual.lhs}\n")
    out.write(f"rhs: {residual.rhs}\n")
    out.write("identity holds\n" if residual.holds else "IDENTITY VIOLATED\n")
    return 0 if residual.holds else 1


def _cmd_audit(args: argparse.Namespace, out: IO[str]) -> int:
    doc = _read_document(args.file)
    audit = analysis.weight_one_audit(doc.family)
    out.write(f"weight: {audit.family_weight}\n")
    out.write(audit.verdict + "\n")
    return 0 if audit.consistent else 1


def _cmd_export_cnf(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    _write_text(export_cnf(doc.family), args.out)
    return 0


def _cmd_search(args: argparse.Namespace, out: IO[str]) -> int:
    report = search.search_min_unary(
        args.r, args.max_size, args.max_vertices, workers=args.workers
    )
    out.write(
        f"search: r={report.r} max_size={report.size_bound}"
        f" max_vertices={report.vertex_bound}\n"
    )
    out.write(
        f"examined: {report.families_examined} families,"
        f" {report.canonical_classes} canonical classes\n"
    )
    if report.witness is None:
        out.write("result: all-colorable\n")
    else:
        out.write(f"result: found size {report.witness_size}\n")
        for m in report.witness.maps:
            out.write(f"  map {list(m.entries)}\n")
    return 0


def _cmd_bracket(args: argparse.Namespace, out: IO[str]) -> int:
    report = search.verify_bracket(args.r, workers=args.workers)
    out.write(
        f"bracket: r={report.r} lower={report.lower_bound}"
        f" upper={report.upper_bound}\n"
    )
    out.write(
        f"witness: size={report.witness_size} source={report.witness_source}"
        f" certification={report.certification}\n"
    )
    if report.search_min_size is not None:
        out.write(f"search-minimum: {report.search_min_size}\n")
    out.write("consistent\n" if report.consistent else "INCONSISTENT\n")
    return 0 if report.consistent else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcover",
        description="Construct, verify, and certify families of forbidden"
        " partial 0/1 assignments.",
    )
    parser.add_argument(
        "--workers", type=int, default=1, help="worker processes for enumeration"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="emit a built-in gadget")
    p_construct.add_argument("gadget", choices=GADGET_NAMES)
    p_construct.add_argument("--r", type=int, default=None)
    p_construct.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="classify a family document")
    p_verify.add_argument("file", nargs="?", default="-")
    p_verify.add_argument("--claims", action="store_true")

    p_color = sub.add_parser("color", help="search for an avoiding coloring")
    p_color.add_argument("file", nargs="?", default="-")
    p_color.add_argument("--count", action="store_true")
    p_color.add_argument("--sample", type=int, default=None)
    p_color.add_argument("--seed", type=int, default=0)

    p_weight = sub.add_parser("weight", help="print the exact family weight")
    p_weight.add_argument("file", nargs="?", default="-")

    p_parity = sub.add_parser("parity", help="check the signed weight identity")
    p_parity.add_argument("file", nargs="?", default="-")
    p_parity.add_argument("--set", required=True, help="comma-separated vertices")

    p_audit = sub.add_parser("audit-weight-one", help="weight-1 structure audit")
    p_audit.add_argument("file", nargs="?", default="-")

    p_cnf = sub.add_parser("export-cnf", help="emit the family as DIMACS CNF")
    p_cnf.add_argument("file", nargs="?", default="-")
    p_cnf.add_argument("--out", default=None)

    p_search = sub.add_parser("search-unary", help="minimality search")
    p_search.add_argument("--r", type=int, required=True)
    p_search.add_argument("--max-size", type=int, required=True)
    p_search.add_argument("--max-vertices", type=int, required=True)

    p_bracket = sub.add_parser("bracket", help="bracket the minimum family size")
    p_bracket.add_argument("--r", type=int, required=True)

    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "construct":
            return _cmd_construct(args, parser)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "color":
            return _cmd_color(args, out)
        if args.command == "weight":
            return _cmd_weight(args, out)
        if args.command == "parity":
            return _cmd_parity(args, out)
        if args.command == "audit-weight-one":
            return _cmd_audit(args, out)
        if args.command == "export-cnf":
            return _cmd_export_cnf(args)
        if args.command == "search-unary":
            return _cmd_search(args, out)
        if args.command == "bracket":
            return _cmd_bracket(args, out)
        parser.error(f"unknown command {args.command}")
    except (DpcoverError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
