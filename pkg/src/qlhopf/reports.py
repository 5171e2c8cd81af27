"""Structured report assembly for the CLI.

Reports are plain dictionaries serialized as sorted-key JSON so two
runs on the same input are byte-identical; DOT output is emitted
separately for the graph objects.
"""

from __future__ import annotations

from . import catalog as cat
from .extquiver import (
    classify_graph,
    diagram_components,
    diagram_dot,
    ext1_dim,
    gabriel_quiver,
    quiver_dot,
    rep_type_verdict,
    separation_diagram,
)
from .hmodules import certify_projective_cover, is_isomorphic, restrict_isotypic, tensor
from .onedim import ext_space_1dim, one_dim_census
from .qldata import QlDatum, validate
from .scalars import format_gq
from .table import algebra_radical, build_table


def is_s3_family(datum: QlDatum) -> bool:
    return datum.group.n == 3


def one_dim_report(datum: QlDatum) -> dict:
    census = one_dim_census(datum)
    # which quadratic classes constrain the scalar solutions: even classes
    # through the vanishing condition, odd classes through the products;
    # size-1 classes are flagged since their sums degenerate (alpha empty)
    classes = {
        "sizes": [c.size for c in datum.rprime_classes()],
        "singletons": [c.index for c in datum.rprime_classes() if c.size == 1],
        "even_constraints": [c.index for c in datum.rprime_classes()
                             if c.size % 2 == 0],
        "odd_constraints": [c.index for c in datum.rprime_classes()
                            if c.size % 2 == 1],
    }
    doc: dict = {"census": {}, "ext": {}, "quadratic_classes": classes}
    built = {}
    for name, exts in census:
        doc["census"][name] = [
            {"gamma": [format_gq(g) for g in e.gamma]} for e in exts
        ]
        if exts:
            built[name] = exts[0]
    for src_name, src in sorted(built.items()):
        for tgt_name, tgt in sorted(built.items()):
            dim, sols = ext_space_1dim(datum, src, tgt)
            entry = {"dim": dim}
            if sols and any(sols[0].f):
                entry["representative_f"] = [format_gq(x) for x in sols[0].f]
            doc["ext"][f"{src_name}->{tgt_name}"] = entry
    return doc


def full_report(datum: QlDatum, step_limit: int = 10000, tab=None) -> dict:
    """Everything the S_3 liftings support: table, radical, simples,
    fusion, Ext, quiver with classification, projective covers."""
    lam_values = sorted(format_gq(v) for v in datum.lambdas.values())
    lam = 0 if all(v == "0" for v in lam_values) else 1
    doc: dict = {"datum": datum.name, "valid": validate(datum).ok}
    if tab is None:
        tab = build_table(datum, step_limit=step_limit)
    dim_j, dim_ss, _ = algebra_radical(tab)
    doc["algebra"] = {
        "dimension": tab.dim,
        "radical_dimension": dim_j,
        "semisimple_dimension": dim_ss,
    }
    simples = [e.module for e in cat.simples(lam)]
    doc["simples"] = [
        {
            "name": m.name,
            "dim": m.dim,
            "isotypic": restrict_isotypic(m),
        }
        for m in simples
    ]
    if lam == 1:
        fusion = {}
        for (ln, rn), target in sorted(cat.fusion_expected().items()):
            prod = tensor(cat.catalog_module(datum, ln), cat.catalog_module(datum, rn))
            ok = is_isomorphic(prod, cat.catalog_module(datum, target))
            fusion[f"{ln} (x) {rn}"] = {"target": target, "verified": ok is True}
        doc["fusion"] = fusion
    ext = {}
    for a in simples:
        for b in simples:
            d, _ = ext1_dim(datum, a, b)
            if d:
                ext[f"{a.name}->{b.name}"] = d
    doc["ext"] = ext
    q = gabriel_quiver(datum, simples)
    doc["quiver"] = {
        "vertices": list(q.vertices),
        "arrows": {f"{q.vertices[i]}->{q.vertices[j]}": m for (i, j), m in sorted(q.arrows.items())},
        "arrow_count": q.arrow_count,
    }
    sep = separation_diagram(q)
    comps = []
    for verts, edges in diagram_components(sep):
        cl = classify_graph(verts, edges)
        comps.append(
            {
                "vertices": len(verts),
                "edges": len(edges),
                "class": cl.kind + (f" {cl.name}" if cl.name else ""),
            }
        )
    verdict = rep_type_verdict(q)
    doc["separation_diagram"] = {
        "components": comps,
        "verdict": {
            "square_zero_quotient": verdict.quotient_type,
            "finite_type_excluded": verdict.finite_excluded,
            "statement": verdict.text,
        },
    }
    covers = []
    audit = 0
    for cover, simple in cat.projectives(lam, tab):
        cert = certify_projective_cover(cover.module, simple.module, tab)
        covers.append(
            {
                "cover": cover.name,
                "dim": cover.module.dim,
                "covers": simple.name,
                "certified": cert.ok,
            }
        )
        audit += cover.module.dim * simple.module.dim
    doc["projective_covers"] = {"covers": covers, "dimension_audit": audit}
    doc["one_dimensional"] = one_dim_report(datum)
    return doc


def report_dot_outputs(datum: QlDatum) -> dict[str, str]:
    lam_values = [format_gq(v) for v in datum.lambdas.values()]
    lam = 0 if all(v == "0" for v in lam_values) else 1
    simples = [e.module for e in cat.simples(lam)]
    q = gabriel_quiver(datum, simples)
    sep = separation_diagram(q)
    return {
        "quiver": quiver_dot(q, title=f"quiver of {datum.name}"),
        "separation": diagram_dot(sep, title=f"separation diagram of {datum.name}"),
    }
