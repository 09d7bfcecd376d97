"""Command-line front end: ``fcslab <command> ...``.

Exit codes: 0 success, 1 validation or theorem failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .catalog import CATALOG, catalog_entry, dumps_ring, load_ring, manifest, save_ring
from .ideals import (
    Side,
    all_ideals,
    is_local,
    is_principal,
    is_principal_ideal_ring,
    jacobson_radical,
    maximal_ideals,
)
from .module import (
    class_counts,
    classify_plane,
    fcs_intersection_matrix,
    fcs_list,
    intersection_property,
    outliers,
)
from .ring import (
    FiniteRing,
    OrderCapExceeded,
    RingFormatError,
    RingValidationError,
    is_commutative,
    units,
)
from .theorems import run_all

CLASSIFY_COLUMNS = ["ring", "side", "a", "b", "class"]
SCAN_COLUMNS = [
    "ring",
    "order",
    "commutative",
    "maximal_right_ideals",
    "pir_right",
    "local",
    "outliers_left",
    "outliers_right",
    "fcs_left",
    "nonunimodular_fcs_left",
    "nonunimodular_fcs_right",
    "intersection_property",
    "suite",
    "error",
]
FORMAT_VERSION = 1


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> FiniteRing:
    try:
        return load_ring(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", 2) from None
    except RingValidationError as exc:
        raise CliError(f"{path}: {type(exc).__name__}: {exc} (witness {list(exc.witness)})", 1) from None
    except RingFormatError as exc:
        raise CliError(f"{path}: RingFormatError: {exc}", 1) from None


def _set(xs, n: int | None = None) -> str:
    xs = sorted(xs)
    if n is not None and len(xs) == n:
        return "R"
    return "{" + ",".join(str(x) for x in xs) + "}"


def _yes(flag) -> str:
    return "yes" if flag else "no"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands -----------------------------------------------------------------


def cmd_validate(args) -> int:
    R = _load(args.path)
    _emit(f"{args.path}: valid ring {R.name!r} of order {R.order}, one = {R.one}")
    return 0


def ring_info(R: FiniteRing) -> dict:
    n = R.order
    u = units(R)
    rad = jacobson_radical(R)
    info = {
        "ring": R.name,
        "order": n,
        "one": R.one,
        "commutative": is_commutative(R),
        "units": sorted(u),
        "zero_divisors": sorted(set(R.elements) - u),
    }
    for side in (Side.LEFT, Side.RIGHT):
        ideals = all_ideals(R, side)
        info[f"{side.value}_ideals"] = [sorted(I.members) for I in ideals]
        info[f"{side.value}_nonprincipal"] = [sorted(I.members) for I in ideals if not is_principal(R, I)]
        info[f"maximal_{side.value}_ideals"] = [sorted(I.members) for I in maximal_ideals(R, side)]
        info[f"pir_{side.value}"] = is_principal_ideal_ring(R, side)
    info["radical"] = sorted(rad.radical.members)
    info["nilpotency"] = rad.nilpotency
    info["local"] = is_local(R)
    return info


def cmd_info(args) -> int:
    R = _load(args.path)
    info = ring_info(R)
    if args.format == "json":
        _emit(json.dumps(info, indent=2))
        return 0
    n = R.order
    lines = [
        f"ring: {R.name}",
        f"order: {n}",
        f"one: {R.one}",
        f"commutative: {_yes(info['commutative'])}",
        f"units: {_set(info['units'])}",
        f"zero divisors: {_set(info['zero_divisors'])}",
    ]
    for side in ("left", "right"):
        ideals = info[f"{side}_ideals"]
        lines.append(f"{side} ideals ({len(ideals)}): " + ", ".join(_set(I, n) for I in ideals))
        maxes = info[f"maximal_{side}_ideals"]
        lines.append(f"maximal {side} ideals: {len(maxes)}  " + ", ".join(_set(I, n) for I in maxes))
        nonp = info[f"{side}_nonprincipal"]
        lines.append(f"non-principal {side} ideals: {len(nonp)}  " + ", ".join(_set(I, n) for I in nonp))
        lines.append(f"principal ideal ring ({side}): {_yes(info[f'pir_{side}'])}")
    lines += [
        f"local: {_yes(info['local'])}",
        f"radical: {_set(info['radical'])}",
        f"nilpotency: {info['nilpotency']}",
    ]
    _emit("\n".join(lines))
    return 0


def _fcs_summary(R: FiniteRing, side: str) -> dict:
    subs = fcs_list(R, side)
    return {"fcs": len(subs), "nonunimodular_fcs": sum(not s.unimodular_generated for s in subs)}


def cmd_classify(args) -> int:
    R = _load(args.path)
    rows = classify_plane(R, args.side)
    counts = class_counts(R, args.side)
    summary = {"counts": counts, **_fcs_summary(R, args.side)}
    if args.format == "json":
        doc = {
            "ring": R.name,
            "side": args.side,
            "summary": summary,
            "vectors": [{"a": v.a, "b": v.b, "class": c.value} for v, c in rows],
        }
        _emit(json.dumps(doc, indent=2))
        return 0
    buf = io.StringIO()
    buf.write(f"# fcslab classify v{FORMAT_VERSION}; columns: {','.join(CLASSIFY_COLUMNS)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CLASSIFY_COLUMNS)
    for v, c in rows:
        w.writerow([R.name, args.side, v.a, v.b, c.value])
    for key, value in counts.items():
        buf.write(f"# {key}: {value}\n")
    buf.write(f"# fcs: {summary['fcs']}\n# nonunimodular_fcs: {summary['nonunimodular_fcs']}\n")
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_fcs(args) -> int:
    R = _load(args.path)
    subs = fcs_list(R, args.side)
    matrix = fcs_intersection_matrix(R, args.side) if args.intersections else None
    prop, pair = intersection_property(R, args.side)
    if args.format == "json":
        doc = {
            "ring": R.name,
            "side": args.side,
            "fcs": [
                {"generator": list(s.generator), "size": len(s), "unimodular": s.unimodular_generated}
                for s in subs
            ],
            "intersection_property": prop,
        }
        if matrix is not None:
            doc["intersections"] = matrix.tolist()
        _emit(json.dumps(doc, indent=2))
        return 0
    lines = [f"{R.name} [{args.side}]: {len(subs)} free cyclic submodules"]
    for i, s in enumerate(subs):
        flag = "unimodular" if s.unimodular_generated else "NON-UNIMODULAR"
        lines.append(f"  {i:>3}  generator {s.generator}  size {len(s)}  {flag}")
    label = {None: "n/a (no non-unimodular FCS)", True: "yes", False: f"no, e.g. {pair}"}[prop]
    lines.append(f"non-unimodular FCSs meet every other FCS outside (0,0): {label}")
    if matrix is not None:
        lines.append("intersections (shared vectors other than (0,0)):")
        width = len(str(int(matrix.max()))) if matrix.size else 1
        for row in matrix:
            lines.append("  " + " ".join(f"{int(x):>{width}}" for x in row))
    _emit("\n".join(lines))
    return 0


def _catalog_items():
    return [("catalog", e.name) for e in CATALOG]


def cmd_verify(args) -> int:
    if args.catalog:
        sources = _catalog_items()
    elif args.paths:
        sources = [("file", p) for p in args.paths]
    else:
        raise CliError("verify needs ring files or --catalog", 2)
    reports = []
    failed = False
    for kind, ident in sources:
        R = catalog_entry(ident).build() if kind == "catalog" else _load(ident)
        for side in ("left", "right"):
            report = run_all(R, side, radical_dim=args.radical_dim)
            failed |= not report.ok
            reports.append(report)
    if args.format == "json":
        _emit(json.dumps([r.to_dict(args.timings) for r in reports], indent=2))
    else:
        _emit("\n".join(r.to_text(args.timings) for r in reports))
        n_fail = sum(not r.ok for r in reports)
        _emit(f"== {len(reports)} reports, {n_fail} with failures")
    return 1 if failed else 0


def scan_row(kind: str, ident: str, max_order: int | None, radical_dim: int = 2) -> dict | None:
    row = dict.fromkeys(SCAN_COLUMNS, "")
    row["ring"] = ident
    try:
        if kind == "catalog":
            entry = catalog_entry(ident)
            if max_order is not None and entry.order > max_order:
                return None
            R = entry.build()
        else:
            R = load_ring(ident)
            if max_order is not None and R.order > max_order:
                return None
            row["ring"] = R.name
        subs = fcs_list(R, "left")
        prop, _ = intersection_property(R, "left")
        ok = all(run_all(R, side, radical_dim).ok for side in ("left", "right"))
        row.update(
            order=R.order,
            commutative=is_commutative(R),
            maximal_right_ideals=len(maximal_ideals(R, Side.RIGHT)),
            pir_right=is_principal_ideal_ring(R, Side.RIGHT),
            local=is_local(R),
            outliers_left=len(outliers(R, "left")),
            outliers_right=len(outliers(R, "right")),
            fcs_left=len(subs),
            nonunimodular_fcs_left=sum(not s.unimodular_generated for s in subs),
            nonunimodular_fcs_right=_fcs_summary(R, "right")["nonunimodular_fcs"],
            intersection_property="n/a" if prop is None else prop,
            suite="pass" if ok else "fail",
        )
    except (OSError, ValueError, RuntimeError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _scan_job(job):
    return scan_row(*job)


def _matches(row: dict, find: str | None) -> bool:
    if find is None:
        return True
    if row["error"]:
        return False
    if find == "outliers":
        return row["outliers_left"] > 0 or row["outliers_right"] > 0
    return row["nonunimodular_fcs_left"] > 0 or row["nonunimodular_fcs_right"] > 0


def _cell(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def cmd_scan(args) -> int:
    if args.catalog:
        sources = _catalog_items()
    elif args.directory:
        root = Path(args.directory)
        if not root.is_dir():
            raise CliError(f"{root} is not a directory", 2)
        sources = [("file", str(p)) for p in sorted(root.glob("*.json"))]
    else:
        raise CliError("scan needs a directory or --catalog", 2)
    jobs = [(kind, ident, args.max_order, args.radical_dim) for kind, ident in sources]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_scan_job, jobs))
    else:
        rows = [_scan_job(j) for j in jobs]
    rows = [r for r in rows if r is not None and _matches(r, args.find)]
    if args.out == "json":
        _emit(json.dumps({"version": FORMAT_VERSION, "columns": SCAN_COLUMNS, "rows": rows}, indent=2))
    else:
        buf = io.StringIO()
        buf.write(f"# fcslab scan v{FORMAT_VERSION}; columns: {','.join(SCAN_COLUMNS)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SCAN_COLUMNS)
        for r in rows:
            w.writerow([_cell(r[c]) for c in SCAN_COLUMNS])
        sys.stdout.write(buf.getvalue())
    return 0


def _filename(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_") + ".json"


def cmd_catalog(args) -> int:
    if args.export:
        out = Path(args.export)
        out.mkdir(parents=True, exist_ok=True)
        for entry in CATALOG:
            save_ring(entry.build(), out / _filename(entry.name))
        _emit(f"wrote {len(CATALOG)} ring files to {out}")
        return 0
    if args.show:
        sys.stdout.write(dumps_ring(catalog_entry(args.show).build()))
        return 0
    _emit(json.dumps(manifest(), indent=2))
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fcslab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a ring file against the ring axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="units, ideals, radical and ring flags")
    p.add_argument("path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", help="class of every vector of the plane")
    p.add_argument("path")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fcs", help="list free cyclic submodules")
    p.add_argument("path")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--intersections", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_fcs)

    p = sub.add_parser("verify", help="run the theorem checks")
    p.add_argument("paths", nargs="*")
    p.add_argument("--catalog", action="store_true")
    p.add_argument("--radical-dim", type=int, choices=[1, 2, 3], default=2)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="one summary row per ring")
    p.add_argument("directory", nargs="?")
    p.add_argument("--catalog", action="store_true")
    p.add_argument("--max-order", type=int)
    p.add_argument("--find", choices=["outliers", "nonunimodular-fcs"])
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--radical-dim", type=int, choices=[1, 2, 3], default=2)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("catalog", help="list or export the built-in rings")
    p.add_argument("--export", metavar="DIR")
    p.add_argument("--show", metavar="NAME")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"fcslab: {exc}", file=sys.stderr)
        return exc.code
    except OrderCapExceeded as exc:
        print(f"fcslab: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"fcslab: {exc.args[0]}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
