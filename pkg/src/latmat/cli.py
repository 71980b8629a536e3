"""Command-line front end: ``latmat lattice | reducts | infosys``.

Coverings and families arrive as JSON documents with ``universe`` and
``blocks`` keys; information tables arrive as CSV with attribute names in the
header row and object names in the first column.  All outputs are
byte-deterministic for identical inputs.

Exit codes: 0 success, 2 parse error, 3 degenerate input, 4 capacity guard.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .covering import check_covering_equivalences, is_covering
from .dependence import complement_family, reducts_via_hyperplanes
from .errors import (
    CapacityError,
    DegenerateLatticeError,
    DegenerateMatroidError,
    DocumentError,
    LatmatError,
)
from .infosys import InformationSystem
from .lattice import GeometricLattice, build_lattice
from .matroid import GroundSet, SetFamily, TransversalMatroid

DEFAULT_MAX_ELEMENTS = 16
DEFAULT_MAX_ATTRIBUTES = 15

# ---------------------------------------------------------------------------
# document parsing


def load_covering_document(path: str) -> SetFamily:
    """Parse a JSON family document into a SetFamily."""
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{path}: parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    if not isinstance(doc, dict) or "universe" not in doc or "blocks" not in doc:
        raise DocumentError(f"{path}: expected an object with 'universe' and 'blocks' keys")
    universe = doc["universe"]
    blocks = doc["blocks"]
    if not isinstance(universe, list) or not universe:
        raise DocumentError(f"{path}: 'universe' must be a nonempty list")
    if any(not isinstance(e, (str, int)) for e in universe):
        raise DocumentError(f"{path}: universe elements must be strings or integers")
    if not isinstance(blocks, list) or not blocks:
        raise DocumentError(f"{path}: 'blocks' must be a nonempty list")
    for k, block in enumerate(blocks):
        if not isinstance(block, list):
            raise DocumentError(f"{path}: block {k} must be a list")
    try:
        ground = GroundSet(tuple(universe))
        return SetFamily(ground, tuple(frozenset(block) for block in blocks))
    except (LatmatError, ValueError) as exc:
        raise DocumentError(f"{path}: {exc}") from None


def load_table_document(path: str) -> InformationSystem:
    """Parse a CSV table into an InformationSystem.

    Header row: first cell is the object-column label (ignored), the rest are
    attribute names.  Each following row: object name, then one value per
    attribute.  Cells are stripped; empty cells are rejected.
    """
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            raw = [row for row in csv.reader(handle) if row]
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    if len(raw) < 2:
        raise DocumentError(f"{path}: need a header row and at least one object row")
    header = [cell.strip() for cell in raw[0]]
    if len(header) < 2:
        raise DocumentError(f"{path}: header must name at least one attribute")
    attributes = tuple(header[1:])
    if any(a == "" for a in attributes):
        raise DocumentError(f"{path}: empty attribute name in header")
    objects = []
    rows = []
    for lineno, row in enumerate(raw[1:], start=2):
        if len(row) != len(header):
            raise DocumentError(
                f"{path}: row {lineno} has {len(row)} cells, expected {len(header)}"
            )
        cells = [cell.strip() for cell in row]
        if any(cell == "" for cell in cells):
            raise DocumentError(f"{path}: row {lineno} has an empty cell")
        objects.append(cells[0])
        rows.append(tuple(cells[1:]))
    try:
        return InformationSystem(tuple(objects), attributes, tuple(rows))
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# rendering helpers


def fmt_set(ground: GroundSet, subset) -> str:
    return "{" + ",".join(str(e) for e in ground.sorted_members(subset)) + "}"


def fmt_many(ground: GroundSet, sets) -> str:
    return " ".join(fmt_set(ground, s) for s in sets)


def _fmt_group(members, order_of) -> str:
    ordered = sorted(members, key=order_of)
    return "{" + ",".join(str(m) for m in ordered) + "}"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _equivalence_line(report) -> str:
    return (
        "covering checks:"
        f" covering={_yesno(report.covering)}"
        f" empty-set-closed={_yesno(report.empty_set_closed)}"
        f" closures-partition={_yesno(report.closures_partition)}"
        f" closures-are-atoms={_yesno(report.closures_are_atoms)}"
    )


# ---------------------------------------------------------------------------
# JSON codecs (round-trip safe)


def lattice_json_doc(lattice: GeometricLattice) -> dict:
    ground = lattice.ground
    return {
        "universe": list(ground.elements),
        "flats": [
            {"members": list(ground.sorted_members(flat)), "height": height}
            for flat, height in zip(lattice.flats, lattice.heights)
        ],
        "covers": [list(ups) for ups in lattice.covers],
        "bottom": lattice.bottom,
        "top": lattice.top,
    }


def lattice_from_json_doc(doc: dict) -> GeometricLattice:
    ground = GroundSet(tuple(doc["universe"]))
    flats = [frozenset(item["members"]) for item in doc["flats"]]
    heights = [int(item["height"]) for item in doc["flats"]]
    return GeometricLattice.from_flats(ground, flats, heights)


def reducts_json_doc(ground: GroundSet, hyperplanes, complements, reducts, rank: int) -> dict:
    return {
        "universe": list(ground.elements),
        "rank": rank,
        "hyperplanes": [list(ground.sorted_members(h)) for h in hyperplanes],
        "complements": [list(ground.sorted_members(c)) for c in complements],
        "reducts": [list(ground.sorted_members(r)) for r in reducts],
    }


def reducts_from_json_doc(doc: dict) -> tuple[GroundSet, tuple[frozenset, ...]]:
    ground = GroundSet(tuple(doc["universe"]))
    return ground, tuple(frozenset(r) for r in doc["reducts"])


# ---------------------------------------------------------------------------
# commands


def _guard_universe(family: SetFamily, limit: int) -> None:
    n = len(family.ground)
    if n > limit:
        raise CapacityError(
            f"universe capped at {limit} elements, got {n}; raise --max-elems to override"
        )


def cmd_lattice(args) -> int:
    family = load_covering_document(args.path)
    _guard_universe(family, args.max_elems)
    matroid = TransversalMatroid(family, memoize=True)
    lattice = build_lattice(matroid)
    covering = is_covering(family)
    if not covering:
        print("warning: family is not a covering of the universe", file=sys.stderr)

    if args.dot:
        sys.stdout.write(lattice.to_dot())
        return 0

    if args.json:
        doc = lattice_json_doc(lattice)
        doc["covering"] = covering
        if not covering:
            report = check_covering_equivalences(family)
            doc["covering_checks"] = {
                "covering": report.covering,
                "empty_set_closed": report.empty_set_closed,
                "closures_partition": report.closures_partition,
                "closures_are_atoms": report.closures_are_atoms,
            }
        print(json.dumps(doc, indent=2))
        return 0

    ground = family.ground
    print("universe:", " ".join(str(e) for e in ground.elements))
    print("blocks:", fmt_many(ground, family.blocks))
    print("covering:", _yesno(covering))
    print("rank:", matroid.ground_rank)
    print(f"flats ({len(lattice.flats)}):")
    for h in range(lattice.heights[lattice.top] + 1):
        row = [f for f, hh in zip(lattice.flats, lattice.heights) if hh == h]
        print(f"  height {h}: " + fmt_many(ground, row))
    print("atoms:", fmt_many(ground, lattice.atoms()))
    if lattice.top != lattice.bottom:
        print("coatoms:", fmt_many(ground, lattice.coatoms()))
    if not covering:
        print(_equivalence_line(check_covering_equivalences(family)))
    return 0


def cmd_reducts(args) -> int:
    family = load_covering_document(args.path)
    _guard_universe(family, args.max_elems)
    matroid = TransversalMatroid(family, memoize=True)
    ground = family.ground
    hyperplanes = matroid.hyperplanes()
    complements = complement_family(ground, hyperplanes)
    reducts = reducts_via_hyperplanes(matroid)

    if args.json:
        print(
            json.dumps(
                reducts_json_doc(ground, hyperplanes, complements, reducts, matroid.ground_rank),
                indent=2,
            )
        )
        return 0

    print("universe:", " ".join(str(e) for e in ground.elements))
    print("rank:", matroid.ground_rank)
    print(f"hyperplanes ({len(hyperplanes)}):", fmt_many(ground, hyperplanes))
    print(f"complements ({len(complements)}):", fmt_many(ground, complements))
    print(f"reducts ({len(reducts)}):")
    for reduct in reducts:
        print("  " + fmt_set(ground, reduct))
    return 0


def _drop_decision_column(system: InformationSystem, decision: str) -> InformationSystem:
    # relative reducts are out of scope; the decision column is set aside and
    # reduction runs over the remaining condition attributes
    if decision not in system.attributes:
        raise DocumentError(f"decision column {decision!r} is not in the table")
    keep = [j for j, a in enumerate(system.attributes) if a != decision]
    if not keep:
        raise DocumentError("table has no condition attributes besides the decision column")
    return InformationSystem(
        system.objects,
        tuple(system.attributes[j] for j in keep),
        tuple(tuple(row[j] for j in keep) for row in system.rows),
    )


def cmd_infosys(args) -> int:
    system = load_table_document(args.path)
    if args.decision is not None:
        system = _drop_decision_column(system, args.decision)
    attr_order = system.attribute_index
    object_order = {x: i for i, x in enumerate(system.objects)}.__getitem__
    condition = system.check_saturation_condition(max_attributes=args.max_attrs)
    if args.force_brute or not condition:
        method = "brute-force"
        reducts = system.brute_force_reducts(max_attributes=args.max_attrs)
    else:
        method = "quotient-rule"
        reducts = system.reducts_via_quotient(max_attributes=args.max_attrs)

    if args.json:
        doc = {
            "objects": list(system.objects),
            "attributes": list(system.attributes),
            "decision": args.decision,
            "partitions": {
                str(a): [
                    sorted(block, key=object_order)
                    for block in system.indiscernibility([a])
                ]
                for a in system.attributes
            },
            "attribute_blocks": [
                sorted(block, key=attr_order) for block in system.attribute_quotient()
            ],
            "condition_holds": condition,
            "method": method,
            "reducts": [sorted(r, key=attr_order) for r in reducts],
        }
        print(json.dumps(doc, indent=2))
        return 0

    print("objects:", " ".join(str(x) for x in system.objects))
    print("attributes:", " ".join(str(a) for a in system.attributes))
    if args.decision is not None:
        print(f"decision column: {args.decision} (excluded from reduction)")
    print("partitions:")
    for a in system.attributes:
        blocks = system.indiscernibility([a])
        print(f"  {a}: " + " ".join(_fmt_group(b, object_order) for b in blocks))
    print(
        "attribute blocks:",
        " ".join(_fmt_group(b, attr_order) for b in system.attribute_quotient()),
    )
    print("condition:", "holds" if condition else "fails")
    if not condition:
        print("note: condition fails; falling back to brute-force reducts")
    print(f"reducts ({len(reducts)}) via {method}:")
    for reduct in reducts:
        print("  " + _fmt_group(reduct, attr_order))
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latmat",
        description=(
            "Turn set families into transversal matroids, materialize the "
            "lattice of flats, and compute attribute reducts."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="flats, atoms and coatoms of the induced matroid")
    lat.add_argument("path", help="JSON family document")
    group = lat.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    group.add_argument("--json", action="store_true", help="emit the lattice as JSON")
    lat.add_argument("--max-elems", type=int, default=DEFAULT_MAX_ELEMENTS, metavar="N")
    lat.set_defaults(func=cmd_lattice)

    red = sub.add_parser("reducts", help="hyperplanes, their complements, and all reducts")
    red.add_argument("path", help="JSON family document")
    red.add_argument("--json", action="store_true", help="emit results as JSON")
    red.add_argument("--max-elems", type=int, default=DEFAULT_MAX_ELEMENTS, metavar="N")
    red.set_defaults(func=cmd_reducts)

    inf = sub.add_parser("infosys", help="attribute partitions, quotient and reducts of a table")
    inf.add_argument("path", help="CSV table")
    inf.add_argument("--force-brute", action="store_true", help="always use the brute-force route")
    inf.add_argument("--json", action="store_true", help="emit results as JSON")
    inf.add_argument("--max-attrs", type=int, default=DEFAULT_MAX_ATTRIBUTES, metavar="N")
    inf.add_argument(
        "--decision",
        metavar="NAME",
        default=None,
        help="set a column aside as the decision attribute (excluded from reduction)",
    )
    inf.set_defaults(func=cmd_infosys)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DegenerateMatroidError, DegenerateLatticeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except BrokenPipeError:
        # downstream consumer closed the pipe, e.g. DOT output into head
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    raise SystemExit(main())
