"""Generic extension spaces, Gabriel quivers and representation type.

Ext^1 between two verified modules is computed in the gauge where the
group part of the middle term is block-diagonal (legitimate because the
group algebra is semisimple, so every extension splits over it): the
unknowns are one off-diagonal block per rack letter, constrained by the
linearized braided commutation and quadratic relations; coboundaries
come from G-equivariant maps only, matching the gauge.  The separation
diagram of the quiver is classified exactly through the Tits form
2I - A (positive definite = finite Dynkin, positive semidefinite with
one-dimensional radical = affine) with the name resolved by graph
isomorphism against generated reference diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import networkx as nx
import sympy

from .hmodules import HModule, build_extension, hom_group
from .linalg import ExactMatrix, Subspace, kernel_basis
from .qldata import QlDatum
from .relations import relation_set
from .scalars import ONE, ZERO


def ext1_dim(datum: QlDatum, m: HModule, n: HModule):
    """(dim Ext^1(m, n), representative cocycles).

    A cocycle is a family of blocks F_i: M -> N; each representative
    extends the coboundary space inside the solution space, so the
    returned list has exactly the Ext dimension many entries and each
    builds a middle module through build_extension.
    """
    X = datum.rack.size
    dn, dm = n.dim, m.dim
    block = dn * dm
    nvars = X * block

    def entry(i: int, r: int, c: int) -> int:
        return i * block + r * dm + c

    rows = []
    # linearized braided commutation, on the group generators
    for t in datum.group.gens:
        rn = n.rho(t)
        rm = m.rho(t)
        for l in range(X):
            tl = datum.act(t, l)
            chi = datum.chi_of(l, t)
            # rho_N(t) F_l - chi F_{t.l} rho_M(t) = 0
            for r in range(dn):
                for c in range(dm):
                    row = [ZERO] * nvars
                    for k in range(dn):
                        v = rn[r, k]
                        if v:
                            row[entry(l, k, c)] = row[entry(l, k, c)] + v
                    for k in range(dm):
                        v = rm[k, c]
                        if v:
                            row[entry(tl, r, k)] = row[entry(tl, r, k)] - chi * v
                    if any(row):
                        rows.append(row)
    # linearized quadratic relations
    for rel in relation_set(datum).quadratics:
        for r in range(dn):
            for c in range(dm):
                row = [ZERO] * nvars
                for (i, j), coeff in rel.terms:
                    an = n.rho_a(i)
                    for k in range(dn):
                        v = an[r, k]
                        if v:
                            row[entry(j, k, c)] = row[entry(j, k, c)] + coeff * v
                    am = m.rho_a(j)
                    for k in range(dm):
                        v = am[k, c]
                        if v:
                            row[entry(i, r, k)] = row[entry(i, r, k)] + coeff * v
                if any(row):
                    rows.append(row)
    if rows:
        cocycles = kernel_basis(ExactMatrix.from_rows(rows))
    else:
        cocycles = [
            [ONE if k == j else ZERO for k in range(nvars)] for j in range(nvars)
        ]

    span = Subspace(nvars)
    for T in hom_group(m, n):
        vec = [ZERO] * nvars
        for i in range(X):
            F = n.rho_a(i) * T - T * m.rho_a(i)
            for r in range(dn):
                for c in range(dm):
                    vec[entry(i, r, c)] = F[r, c]
        if any(vec):
            assert _in_solution_space(rows, vec), "coboundary violates cocycle system"
            span.add(vec)
    boundary_dim = span.dim
    reps = []
    for v in cocycles:
        if span.add(v):
            reps.append(
                [
                    ExactMatrix(dn, dm, v[i * block : (i + 1) * block])
                    for i in range(X)
                ]
            )
    assert len(reps) == len(cocycles) - boundary_dim
    return len(reps), reps


def _in_solution_space(rows, vec) -> bool:
    for row in rows:
        s = ZERO
        for a, b in zip(row, vec):
            if a and b:
                s = s + a * b
        if s:
            return False
    return True


def middle_module(datum: QlDatum, m: HModule, n: HModule, cocycle, name="") -> HModule:
    return build_extension(m, n, cocycle, name=name)


@dataclass
class Quiver:
    vertices: tuple[str, ...]
    arrows: dict  # (i, j) -> multiplicity

    @property
    def arrow_count(self) -> int:
        return sum(self.arrows.values())


def gabriel_quiver(datum: QlDatum, simples: list[HModule], names=None) -> Quiver:
    """Arrow multiplicity i -> j equals dim Ext^1(S_i, S_j)."""
    names = tuple(names or [s.name or f"S{k}" for k, s in enumerate(simples)])
    arrows = {}
    for i, si in enumerate(simples):
        for j, sj in enumerate(simples):
            d, _ = ext1_dim(datum, si, sj)
            if d:
                arrows[(i, j)] = d
    return Quiver(names, arrows)


@dataclass
class DiagramGraph:
    """Separation diagram: one primed and one double-primed copy of the
    vertex set, an edge i' -- j'' per arrow i -> j."""

    vertices: tuple[str, ...]
    edges: tuple  # tuple of (u, v) with multiplicity by repetition


def separation_diagram(q: Quiver) -> DiagramGraph:
    n = len(q.vertices)
    vertices = tuple(f"{v}'" for v in q.vertices) + tuple(f"{v}''" for v in q.vertices)
    edges = []
    for (i, j), mult in sorted(q.arrows.items()):
        edges.extend([(vertices[i], vertices[n + j])] * mult)
    return DiagramGraph(vertices, tuple(edges))


def diagram_components(g: DiagramGraph):
    """Connected components as (vertex tuple, edge tuple), sorted by size."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(g.edges)
    comps = []
    for comp in nx.connected_components(graph):
        verts = tuple(sorted(comp))
        edges = tuple(e for e in g.edges if e[0] in comp or e[1] in comp)
        comps.append((verts, edges))
    comps.sort(key=lambda ve: (len(ve[0]), ve[0]))
    return comps


@dataclass(frozen=True)
class GraphClass:
    kind: str  # "dynkin" | "affine" | "neither"
    name: str | None


def _tits_matrix(verts, edges):
    idx = {v: k for k, v in enumerate(verts)}
    n = len(verts)
    a = [[0] * n for _ in range(n)]
    for u, v in edges:
        if u == v:
            a[idx[u]][idx[u]] += 2
        else:
            a[idx[u]][idx[v]] += 1
            a[idx[v]][idx[u]] += 1
    return sympy.Matrix(n, n, lambda r, c: (2 if r == c else 0) - a[r][c])


def _positive_definite(q: "sympy.Matrix") -> bool:
    n = q.rows
    return all(q[:k, :k].det() > 0 for k in range(1, n + 1))


def _positive_semidefinite(q: "sympy.Matrix") -> bool:
    # symmetric with real spectrum: psd iff all char poly coefficients
    # (-1)^k c_k = e_k (sums of principal minors) are nonnegative
    x = sympy.symbols("x")
    coeffs = q.charpoly(x).all_coeffs()
    return all((-1) ** k * c >= 0 for k, c in enumerate(coeffs[1:], start=1))


def _reference_graphs(n: int):
    """Named simply-laced Dynkin and affine diagrams on n vertices."""
    out = []

    def path(k):
        g = nx.MultiGraph()
        g.add_nodes_from(range(k))
        g.add_edges_from((i, i + 1) for i in range(k - 1))
        return g

    if n >= 1:
        out.append((f"A{n}", "dynkin", path(n)))
    if n >= 4:
        g = path(n - 1)
        g.add_edge(n - 1, 1)  # fork at the second vertex
        out.append((f"D{n}", "dynkin", g))
    for name, spine, branch_at in (("E6", 5, 2), ("E7", 6, 2), ("E8", 7, 2)):
        if spine + 1 == n:
            g = path(spine)
            g.add_edge(spine, branch_at)
            out.append((name, "dynkin", g))
    # affine diagrams have n = rank + 1 vertices
    r = n - 1
    if r == 1:
        g = nx.MultiGraph()
        g.add_nodes_from([0, 1])
        g.add_edge(0, 1)
        g.add_edge(0, 1)
        out.append(("A1~", "affine", g))
    if r >= 2:
        g = nx.MultiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from((i, (i + 1) % n) for i in range(n))
        out.append((f"A{r}~", "affine", g))
    if r >= 4:
        g = path(n - 2)  # spine 0..n-3
        g.add_edge(n - 2, 1)
        g.add_edge(n - 1, n - 4)
        out.append((f"D{r}~", "affine", g))
    for name, spine, branch_at, extra in (
        ("E6~", 5, 2, 2),
        ("E7~", 7, 3, None),
        ("E8~", 8, 2, None),
    ):
        if spine + (2 if extra is not None else 1) == n:
            g = path(spine)
            g.add_edge(spine, branch_at)
            if extra is not None:
                g.add_edge(spine + 1, spine)
            out.append((name, "affine", g))
    return out


def _shape_name(verts, edges, kind: str) -> str | None:
    g = nx.MultiGraph()
    g.add_nodes_from(verts)
    g.add_edges_from(edges)
    for name, k, ref in _reference_graphs(len(verts)):
        if k == kind and nx.is_isomorphic(g, ref):
            return name
    return None


def classify_graph(verts, edges) -> GraphClass:
    """Exact Tits-form classification of one connected component.

    Loops are outside the simply-laced Dynkin/affine lists (separation
    diagrams are bipartite, so they never occur there) and are rejected
    outright; this also keeps the single-loop graph, whose Tits form is
    the zero form, out of the affine class.
    """
    if any(u == v for u, v in edges):
        return GraphClass("neither", None)
    q = _tits_matrix(verts, edges)
    if _positive_definite(q):
        return GraphClass("dynkin", _shape_name(verts, edges, "dynkin"))
    if _positive_semidefinite(q) and len(verts) - q.rank() == 1:
        return GraphClass("affine", _shape_name(verts, edges, "affine"))
    return GraphClass("neither", None)


@dataclass
class Verdict:
    quotient_type: str        # representation type of B/J^2
    finite_excluded: bool     # True: B itself cannot be of finite type
    components: list = field(default_factory=list)
    text: str = ""


def rep_type_verdict(q: Quiver) -> Verdict:
    """Radical-square-zero criterion through the separation diagram.

    The quiver of B equals the quiver of B/J^2, and B/J^2 has finite
    (tame) type iff the diagram is a union of Dynkin (affine) pieces;
    a non-finite quotient rules out finite type for B itself, which is
    all the criterion ever asserts about B.
    """
    comps = diagram_components(separation_diagram(q))
    classes = [(verts, classify_graph(verts, edges)) for verts, edges in comps]
    kinds = {c.kind for _, c in classes}
    if kinds <= {"dynkin"}:
        t, excluded = "finite", False
        text = "square-zero quotient of finite representation type; no conclusion about the algebra itself"
    elif kinds <= {"dynkin", "affine"}:
        t, excluded = "tame", True
        text = "not of finite representation type (square-zero quotient is tame)"
    else:
        t, excluded = "wild", True
        text = "not of finite representation type (square-zero quotient is wild)"
    return Verdict(t, excluded, classes, text)


# -- DOT emission -------------------------------------------------------------


def quiver_dot(q: Quiver, title: str = "quiver") -> str:
    lines = [f'digraph "{title}" {{']
    lines.append('  // arrows i -> j with multiplicity dim Ext^1(S_i, S_j)')
    for v in q.vertices:
        lines.append(f'  "{v}";')
    for (i, j), mult in sorted(q.arrows.items()):
        for _ in range(mult):
            lines.append(f'  "{q.vertices[i]}" -> "{q.vertices[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def diagram_dot(g: DiagramGraph, title: str = "separation diagram") -> str:
    lines = [f'graph "{title}" {{']
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
