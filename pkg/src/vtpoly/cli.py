"""Command-line entry point: ``vtpoly <command> ...``.

Exit codes: 0 for success or an affirmative answer, 1 for a negative
verdict, 2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from vtpoly.candmap import (
    InvalidSymbolSet,
    MapFileError,
    NotPolyhedral,
    build_candidate_map,
    format_map,
    read_map_file,
)
from vtpoly.catalog import NAMED_MAPS
from vtpoly.enumeration import enumerate_candidate_maps, filter_classes
from vtpoly.geometry import as_coordinate
from vtpoly.geomiso import UnrealizableOrbit, classify_face_orbit, maps_isomorphic
from vtpoly.realize import (
    NotEmbedded,
    ZeroVector,
    export_off,
    format_coordinate,
    place_vertices,
    search_realizations,
    verify_realization,
)

SUPPORTED_GROUPS = ("T",)
_NUMBER = re.compile(r"[+-]?\d+(/\d+)?")


class UsageError(Exception):
    pass


def _parse_base(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(_NUMBER.fullmatch(p) for p in parts):
        raise UsageError(f"base must be 'a,b,c' with integer or p/q entries, got {text!r}")
    try:
        return as_coordinate(parts)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad base {text!r}: {exc}") from exc


def _load_symbols(path):
    try:
        return read_map_file(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except MapFileError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_map(path):
    symbols = _load_symbols(path)
    try:
        return build_candidate_map(symbols)
    except (InvalidSymbolSet, NotPolyhedral) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _map_name(symbols) -> str:
    for name, named in NAMED_MAPS.items():
        if len(named) == len(symbols) and maps_isomorphic(symbols, named) is not None:
            return name
    return "-"


def cmd_enumerate(args) -> int:
    if args.group not in SUPPORTED_GROUPS:
        raise UsageError(f"group {args.group} unsupported (only T is implemented)")
    classes = enumerate_candidate_maps()
    filters = set(args.filter or ())
    kept = filter_classes(classes, tucker="tucker" in filters, schewe="schewe" in filters,
                          min_genus=args.min_genus, group_kind=args.group)
    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    print("class\tname\tgenus\tV\tE\tF\tdegree\trotation\tsymbols")
    for k, c in enumerate(kept, start=1):
        s = c.summary
        symbols = " ".join(str(x) for x in c.representative)
        name = _map_name(c.representative)
        print(f"{k}\t{name}\t{s.genus}\t{s.vertex_count}\t{s.edge_count}\t"
              f"{s.face_count}\t{s.vertex_degree}\t{' '.join(c.local_rotation)}\t{symbols}")
        if out_dir is not None:
            comment = f"class {k}: genus {s.genus}" + (f", {name}" if name != "-" else "")
            (out_dir / f"class{k}.map").write_text(format_map(c.representative, comment))
    print(f"total: {len(kept)}")
    return 0


def cmd_classify(args) -> int:
    symbols = _load_symbols(args.map)
    status = 0
    for s in symbols:
        try:
            cls = classify_face_orbit(s)
            print(f"{s}\t{cls.name.lower()}\t{cls.value}")
        except UnrealizableOrbit:
            print(f"{s}\tunrealizable")
            status = 1
    return status


def cmd_verify(args) -> int:
    m = _load_map(args.map)
    try:
        report = verify_realization(m, _parse_base(args.base))
    except ZeroVector as exc:
        raise UsageError(str(exc)) from exc
    print("\n".join(report.lines()))
    return 0 if report.embedded else 1


def cmd_search(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    m = _load_map(args.map)
    hits = search_realizations(m, args.bound, workers=args.workers)
    for h in hits:
        print(format_coordinate(h))
    print(f"total: {len(hits)}")
    return 0 if hits else 1


def cmd_export(args) -> int:
    m = _load_map(args.map)
    try:
        text = export_off(place_vertices(m, _parse_base(args.base)))
    except ZeroVector as exc:
        raise UsageError(str(exc)) from exc
    except NotEmbedded as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_isomorphic(args) -> int:
    a = _load_symbols(args.map1)
    b = _load_symbols(args.map2)
    w = maps_isomorphic(a, b)
    if w is None:
        print("witness: none")
        return 1
    if w.is_identity:
        print("witness: identity")
    else:
        rows = ";".join(",".join(str(x) for x in row) for row in w.matrix)
        print(f"witness: {rows}")
    return 0


def cmd_report(args) -> int:
    m = _load_map(args.map)
    s = m.summary()
    print(f"vertices: {s.vertex_count}")
    print(f"edges: {s.edge_count}")
    print(f"faces: {s.face_count}")
    print(f"genus: {s.genus}")
    print(f"degree: {s.vertex_degree}")
    print(f"rotation: {' '.join(m.local_rotation)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vtpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="enumerate candidate maps up to isomorphism")
    e.add_argument("--group", default="T")
    e.add_argument("--filter", action="append", choices=("tucker", "schewe"))
    e.add_argument("--min-genus", type=int, default=None)
    e.add_argument("--out", help="directory for one map file per class")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", help="classify the face orbits of a map file")
    c.add_argument("map")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="check one realization")
    v.add_argument("map")
    v.add_argument("--base", required=True, help="a,b,c with integer or p/q entries")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="grid search for realizing bases")
    s.add_argument("map")
    s.add_argument("--bound", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)

    x = sub.add_parser("export", help="write a realization as a mesh file")
    x.add_argument("map")
    x.add_argument("--base", required=True)
    x.add_argument("--format", choices=("off",), default="off")
    x.add_argument("--out")
    x.set_defaults(func=cmd_export)

    i = sub.add_parser("isomorphic", help="find a geometric isomorphism between two maps")
    i.add_argument("map1")
    i.add_argument("map2")
    i.set_defaults(func=cmd_isomorphic)

    r = sub.add_parser("report", help="counts, genus and local rotation of a map")
    r.add_argument("map")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
