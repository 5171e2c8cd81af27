"""Command-line front end.

Subcommands: validate, report, onedim, fusion, ext, quiver,
projectives, catalog, check-all.  Data comes from --builtin plus the
scalar flags or from a ql-datum JSON file via --datum.  Exit codes:
0 success, 1 semantic failure (invalid datum or failing check),
2 unreadable input, 3 computation limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from . import catalog as cat
from .extquiver import (
    classify_graph,
    diagram_components,
    ext1_dim,
    gabriel_quiver,
    rep_type_verdict,
    separation_diagram,
)
from .hmodules import certify_projective_cover, is_isomorphic, restrict_isotypic, tensor
from .qldata import build_builtin, datum_from_json, validate
from .reports import full_report, is_s3_family, one_dim_report, report_dot_outputs
from .scalars import parse_gq
from .table import ClosureError, RewritingError, build_table


class InputError(Exception):
    pass


def _load_datum(args):
    if getattr(args, "datum", None):
        try:
            with open(args.datum, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
            return datum_from_json(doc)
        except (OSError, ValueError, KeyError) as exc:
            raise InputError(f"cannot read datum: {exc}") from exc
    if not getattr(args, "builtin", None):
        raise InputError("need --builtin or --datum")
    try:
        params = {}
        if args.lam is not None:
            params["lam"] = parse_gq(args.lam)
        if args.Lam is not None:
            params["Lam"] = parse_gq(args.Lam)
        if args.Gam is not None:
            params["Gam"] = parse_gq(args.Gam)
        return build_builtin(args.builtin, args.n, **params)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _write_json(path: str | None, doc) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _lam_of(datum) -> int:
    return 0 if all(not v for v in datum.lambdas.values()) else 1


def _table_of(datum, step_limit: int):
    """Reuse the process-wide tables for the two standard liftings."""
    if step_limit == 10000 and datum.name in ("Q3_minus[0]", "Q3_minus[1]"):
        return acceptance.table(_lam_of(datum))
    return build_table(datum, step_limit=step_limit)


def cmd_validate(args) -> int:
    datum = _load_datum(args)
    report = validate(datum)
    doc = {"datum": datum.name, "valid": report.ok, "failures": report.failures}
    _write_json(args.json, doc)
    return 0 if report.ok else 1


def cmd_report(args) -> int:
    datum = _load_datum(args)
    if not is_s3_family(datum):
        doc = {
            "datum": datum.name,
            "valid": validate(datum).ok,
            "one_dimensional": one_dim_report(datum),
            "note": "full table skipped: only the one-dimensional sector is computed for n >= 4",
        }
        _write_json(args.json, doc)
        return 0
    doc = full_report(datum, step_limit=args.step_limit,
                      tab=_table_of(datum, args.step_limit))
    _write_json(args.json, doc)
    if args.dot:
        dots = report_dot_outputs(datum)
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dots["quiver"])
        with open(args.dot + ".separation", "w", encoding="utf-8") as fh:
            fh.write(dots["separation"])
    if args.dump_table:
        tab = _table_of(datum, args.step_limit)
        with open(args.dump_table, "w", encoding="utf-8") as fh:
            json.dump(tab.to_json(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def cmd_onedim(args) -> int:
    datum = _load_datum(args)
    doc = {"datum": datum.name, **one_dim_report(datum)}
    _write_json(args.json, doc)
    return 0


def cmd_fusion(args) -> int:
    datum = _load_datum(args)
    if not is_s3_family(datum) or _lam_of(datum) != 1:
        raise InputError("fusion table is reported for the nontrivial S_3 lifting")
    rows = {}
    ok = True
    for (ln, rn), target in sorted(cat.fusion_expected().items()):
        prod = tensor(cat.catalog_module(datum, ln), cat.catalog_module(datum, rn))
        verified = is_isomorphic(prod, cat.catalog_module(datum, target)) is True
        ok = ok and verified
        rows[f"{ln} (x) {rn}"] = {"target": target, "verified": verified}
    _write_json(args.json, {"datum": datum.name, "fusion": rows})
    return 0 if ok else 1


def cmd_ext(args) -> int:
    datum = _load_datum(args)
    if not is_s3_family(datum):
        return cmd_onedim(args)
    simples = [e.module for e in cat.simples(_lam_of(datum))]
    doc = {}
    for a in simples:
        for b in simples:
            doc[f"{a.name}->{b.name}"] = ext1_dim(datum, a, b)[0]
    _write_json(args.json, {"datum": datum.name, "ext": doc})
    return 0


def cmd_quiver(args) -> int:
    datum = _load_datum(args)
    if not is_s3_family(datum):
        raise InputError("quivers are computed for the S_3 liftings")
    simples = [e.module for e in cat.simples(_lam_of(datum))]
    q = gabriel_quiver(datum, simples)
    comps = []
    for verts, edges in diagram_components(separation_diagram(q)):
        cl = classify_graph(verts, edges)
        comps.append({"vertices": len(verts), "edges": len(edges),
                      "class": cl.kind + (f" {cl.name}" if cl.name else "")})
    verdict = rep_type_verdict(q)
    doc = {
        "datum": datum.name,
        "arrows": {f"{q.vertices[i]}->{q.vertices[j]}": m
                   for (i, j), m in sorted(q.arrows.items())},
        "arrow_count": q.arrow_count,
        "separation_components": comps,
        "verdict": verdict.text,
    }
    _write_json(args.json, doc)
    if args.dot:
        dots = report_dot_outputs(datum)
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dots["quiver"])
    return 0


def cmd_projectives(args) -> int:
    datum = _load_datum(args)
    if not is_s3_family(datum):
        raise InputError("projective covers are computed for the S_3 liftings")
    lam = _lam_of(datum)
    tab = _table_of(datum, args.step_limit)
    covers = []
    ok = True
    audit = 0
    for cover, simple in cat.projectives(lam, tab):
        cert = certify_projective_cover(cover.module, simple.module, tab)
        ok = ok and cert.ok
        audit += cover.module.dim * simple.module.dim
        covers.append({"cover": cover.name, "dim": cover.module.dim,
                       "covers": simple.name, "certified": cert.ok,
                       "failures": cert.failures})
    _write_json(args.json, {"datum": datum.name, "covers": covers,
                            "dimension_audit": audit})
    return 0 if ok and audit == 72 else 1


def cmd_catalog(args) -> int:
    from .hmodules import module_to_json

    lam = int(args.lam) if args.lam is not None else 1
    entries = cat.simples(lam) + cat.indecomposables3(lam)
    if lam == 1:
        entries += cat.indecomposables4()
    doc = []
    for e in entries:
        item = {
            "name": e.name,
            "dim": e.module.dim,
            "isotypic": restrict_isotypic(e.module),
        }
        if args.modules:
            item["module"] = module_to_json(e.module)
        doc.append(item)
    _write_json(args.json, {"lambda": lam, "entries": doc})
    return 0


def cmd_check_all(args) -> int:
    results = acceptance.run_all()
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlhopf",
        description="exact representation theory of quadratic-lifting Hopf algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, datum=True):
        if datum:
            p.add_argument("--builtin", choices=["Q3_minus", "Qn_minus", "Qn_chi"])
            p.add_argument("--n", type=int, default=None)
            p.add_argument("--lambda", dest="lam", default=None,
                           help="scalar parameter, e.g. 1 or -1/3*i")
            p.add_argument("--Lambda", dest="Lam", default=None)
            p.add_argument("--Gamma", dest="Gam", default=None)
            p.add_argument("--datum", help="path to a ql-datum JSON file")
        p.add_argument("--json", help="write the report to this path")
        p.add_argument("--step-limit", dest="step_limit", type=int, default=10000)

    handlers = {}
    for name, fn, extra in [
        ("validate", cmd_validate, ()),
        ("report", cmd_report, ("dot", "dump-table")),
        ("onedim", cmd_onedim, ()),
        ("fusion", cmd_fusion, ()),
        ("ext", cmd_ext, ()),
        ("quiver", cmd_quiver, ("dot",)),
        ("projectives", cmd_projectives, ()),
    ]:
        p = sub.add_parser(name)
        add_common(p)
        if "dot" in extra:
            p.add_argument("--dot", help="write DOT graph output to this path")
        if "dump-table" in extra:
            p.add_argument("--dump-table", dest="dump_table",
                           help="write the structure-constant table as JSON")
        handlers[name] = fn
    p = sub.add_parser("catalog")
    p.add_argument("--lambda", dest="lam", default=None, choices=["0", "1"])
    p.add_argument("--json")
    p.add_argument("--modules", action="store_true",
                   help="include full generator matrices per entry")
    handlers["catalog"] = cmd_catalog
    p = sub.add_parser("check-all")
    handlers["check-all"] = cmd_check_all

    parser.set_defaults(handlers=handlers)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = args.handlers[args.command]
    try:
        return handler(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (RewritingError, ClosureError) as exc:
        print(f"computation limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
