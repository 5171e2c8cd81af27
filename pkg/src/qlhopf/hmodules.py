"""Modules over lifting algebras as generator matrices.

An HModule carries one matrix per adjacent transposition of the group
plus one matrix per rack element; every other group element acts
through a fixed factorization into the generators.  All structural
questions (does this satisfy the relations? is it simple?
indecomposable? isomorphic to that one?) are decided by exact linear
algebra, with explicit "unknown" outcomes where a deterministic search
is exhausted without a certificate instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import s3_character_table
from .linalg import (
    ExactMatrix,
    Subspace,
    invert,
    kernel_basis,
    lift_idempotent,
    minimal_polynomial,
    rank,
    subalgebra_closure,
    trace_form_radical,
)
from .polyfactor import (
    factor_over_gaussian_rationals,
    poly_eval_matrix,
    poly_mul,
    poly_xgcd,
)
from .qldata import QlDatum
from .relations import coproduct_antipode_data, relation_set
from .scalars import GQ, ONE, ZERO


class HModule:
    """A representation of H(Q) given by generator matrices."""

    def __init__(self, datum: QlDatum, dim: int, h_gens: dict, a_acts: list, name: str = ""):
        self.datum = datum
        self.dim = dim
        self.h_gens = dict(h_gens)  # group element index (a generator) -> matrix
        self.a_acts = list(a_acts)  # rack index -> matrix
        self.name = name
        for g in datum.group.gens:
            if g not in self.h_gens:
                raise ValueError("missing generator matrix for " + datum.group.label(g))
        self._words = datum.group.factor_words()
        self._rho: dict[int, ExactMatrix] = {datum.group.identity: ExactMatrix.identity(dim)}

    def rho(self, t: int) -> ExactMatrix:
        """Action of H_t, built from the generator factorization."""
        m = self._rho.get(t)
        if m is None:
            m = ExactMatrix.identity(self.dim)
            for g in self._words[t]:
                m = m * self.h_gens[g]
            self._rho[t] = m
        return m

    def rho_a(self, i: int) -> ExactMatrix:
        return self.a_acts[i]

    def generator_matrices(self) -> list[ExactMatrix]:
        return [self.h_gens[g] for g in self.datum.group.gens] + list(self.a_acts)

    def __repr__(self):
        return f"HModule({self.name or 'unnamed'}, dim={self.dim})"


@dataclass
class ModuleReport:
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        return "module verifies" if self.ok else "module fails:\n" + "\n".join(
            "  - " + f for f in self.failures
        )


def verify_module(m: HModule) -> ModuleReport:
    """Evaluate every defining relation of H(Q) on the matrices."""
    d = m.datum
    G = d.group
    bad: list[str] = []
    for s in range(G.order):
        rs = m.rho(s)
        for t in range(G.order):
            if rs * m.rho(t) != m.rho(G.mul(s, t)):
                bad.append(f"group action fails at {G.label(s)} * {G.label(t)}")
    for t in range(G.order):
        rt = m.rho(t)
        for l in range(d.rack.size):
            lhs = rt * m.rho_a(l)
            rhs = (m.rho_a(d.act(t, l)) * rt).scale(d.chi_of(l, t))
            if lhs != rhs:
                bad.append(
                    f"braided commutation fails at t={G.label(t)}, l={d.rack.labels[l]}"
                )
    for rel in relation_set(d).quadratics:
        acc = ExactMatrix.zeros(m.dim, m.dim)
        for (i, j), c in rel.terms:
            acc = acc + (m.rho_a(i) * m.rho_a(j)).scale(c)
        rhs = ExactMatrix.zeros(m.dim, m.dim)
        if rel.lam:
            rhs = (ExactMatrix.identity(m.dim) - m.rho(rel.rhs_group)).scale(rel.lam)
        if acc != rhs:
            bad.append(f"quadratic relation of class {rel.class_index} fails")
    return ModuleReport(bad)


def restrict_isotypic(m: HModule, character_table=None) -> dict[str, int]:
    """Multiplicities of the irreducible G-characters in the restriction."""
    d = m.datum
    table = character_table
    if table is None:
        if d.group.n != 3:
            raise ValueError("built-in character table only covers S_3")
        table = s3_character_table()
    G = d.group
    traces = {t: m.rho(t).trace() for t in range(G.order)}
    out: dict[str, int] = {}
    total = 0
    for name, dim_chi, chi in table:
        s = ZERO
        for t in range(G.order):
            s = s + GQ(chi(G.elements[G.inv(t)])) * traces[t]
        mult = s / GQ(G.order)
        if mult.im or mult.re.denominator != 1 or mult.re < 0:
            raise ArithmeticError(f"non-integral multiplicity {mult} for {name}")
        out[name] = int(mult.re)
        total += out[name] * dim_chi
    if total != m.dim:
        raise ArithmeticError("isotypic multiplicities do not add up to the dimension")
    return out


def tensor(m: HModule, n: HModule) -> HModule:
    """Module structure on M (x) N through Delta: group letters act
    diagonally, a_i acts as H_{g_i} (x) a_i + a_i (x) 1."""
    if m.datum is not n.datum and m.datum.name != n.datum.name:
        raise ValueError("tensor factors live over different data")
    d = m.datum
    co = coproduct_antipode_data(d)
    h_gens = {g: m.h_gens[g].kron(n.h_gens[g]) for g in d.group.gens}
    eye_n = ExactMatrix.identity(n.dim)
    a_acts = []
    for i in range(d.rack.size):
        gi = co.skew_group_of[i]
        a_acts.append(m.rho(gi).kron(n.rho_a(i)) + m.rho_a(i).kron(eye_n))
    return HModule(d, m.dim * n.dim, h_gens, a_acts,
                   name=f"({m.name or '?'})(x)({n.name or '?'})")


def dual(m: HModule) -> HModule:
    """Dual module via the antipode: (x.f)(v) = f(S(x) v).  The result
    is re-verified against the relations before being returned."""
    d = m.datum
    co = coproduct_antipode_data(d)
    h_gens = {g: m.rho(d.group.inv(g)).transpose() for g in d.group.gens}
    a_acts = []
    for i in range(d.rack.size):
        inv_g, _ = co.antipode_a(i)
        a_acts.append((m.rho(inv_g) * m.rho_a(i)).scale(GQ(-1)).transpose())
    out = HModule(d, m.dim, h_gens, a_acts, name=f"({m.name or '?'})*")
    report = verify_module(out)
    if not report.ok:
        raise ArithmeticError(f"dual failed verification: {report.failures[:3]}")
    return out


def is_simple(m: HModule) -> bool:
    """Burnside density: the action algebra is all of End(V) iff simple.
    Sound over Q(i) whenever End of the module is the ground field,
    which holds for every module in this catalog."""
    closure = subalgebra_closure(m.generator_matrices(), unital=True)
    return len(closure) == m.dim * m.dim


def _orbit_representatives(d: QlDatum) -> list[int]:
    reps = []
    seen: set[int] = set()
    for i in range(d.rack.size):
        if i in seen:
            continue
        reps.append(i)
        for t in range(d.group.order):
            seen.add(d.act(t, i))
    return reps


def hom_group(m: HModule, n: HModule) -> list[ExactMatrix]:
    """Basis of Hom_G(M, N) by averaging single-entry matrices."""
    d = m.datum
    G = d.group
    pairs = []
    for t in range(G.order):
        pairs.append((n.rho(t), m.rho(G.inv(t))))
    inv_order = GQ(G.order).inverse()
    span = Subspace(n.dim * m.dim)
    basis = []
    for p in range(n.dim):
        for q in range(m.dim):
            acc = [ZERO] * (n.dim * m.dim)
            for rn, rmi in pairs:
                for r in range(n.dim):
                    a = rn[r, p]
                    if not a:
                        continue
                    base = r * m.dim
                    qrow = q * m.dim
                    for s in range(m.dim):
                        b = rmi.entries[qrow + s]
                        if b:
                            acc[base + s] = acc[base + s] + a * b
            vec = [inv_order * x for x in acc]
            if any(vec) and span.add(vec):
                basis.append(ExactMatrix(n.dim, m.dim, vec))
    return basis


def hom_space(m: HModule, n: HModule) -> list[ExactMatrix]:
    """Basis of intertwiners M -> N for the full algebra action."""
    gbasis = hom_group(m, n)
    if not gbasis:
        return []
    d = m.datum
    reps = _orbit_representatives(d)
    rows = []
    for i in reps:
        an, am = n.rho_a(i), m.rho_a(i)
        commutators = [an * T - T * am for T in gbasis]
        for e in range(n.dim * m.dim):
            row = [c.entries[e] for c in commutators]
            if any(row):
                rows.append(row)
    if not rows:
        coeff_sets = [[ONE if k == j else ZERO for k in range(len(gbasis))]
                      for j in range(len(gbasis))]
    else:
        coeff_sets = kernel_basis(ExactMatrix.from_rows(rows))
    out = []
    for coeffs in coeff_sets:
        acc = ExactMatrix.zeros(n.dim, m.dim)
        for c, T in zip(coeffs, gbasis):
            if c:
                acc = acc + T.scale(c)
        out.append(acc)
    return out


def is_isomorphic(m: HModule, n: HModule, grid_budget: int = 50000):
    """True / False when certified, None when the deterministic search
    is exhausted without a certificate.

    A nonzero determinant certifies True.  For False, the determinant
    of a generic combination of the Hom basis is a polynomial of degree
    <= dim in each coefficient, so vanishing on a (dim+1)-point grid
    per variable certifies it vanishes identically.
    """
    if m.dim != n.dim:
        return False
    homs = hom_space(m, n)
    if not homs:
        return False
    for T in homs:
        if invert(T) is not None:
            return True
    h, dim = len(homs), m.dim
    if h == 1:
        return False  # the line through a singular map has no isomorphisms
    points = dim + 1
    if points**h > grid_budget:
        return None
    from itertools import product as iproduct

    for coeffs in iproduct(range(points), repeat=h):
        if sum(coeffs) == 0:
            continue
        acc = ExactMatrix.zeros(n.dim, m.dim)
        for c, T in zip(coeffs, homs):
            if c:
                acc = acc + T.scale(GQ(c))
        if invert(acc) is not None:
            return True
    return False


def endomorphism_data(m: HModule):
    """(End basis, radical basis) of the endomorphism algebra."""
    end = hom_space(m, m)
    radical = trace_form_radical(end)
    return end, radical


def is_indecomposable(m: HModule):
    """True iff End(M)/rad is one-dimensional (local endomorphisms).
    When End/rad is larger, attempts an explicit splitting; returns
    False on success and None if no idempotent exists over Q(i)."""
    end, radical = endomorphism_data(m)
    if len(end) - len(radical) == 1:
        return True
    e = _splitting_idempotent(m, end, radical)
    if e is not None:
        return False
    return None


@dataclass
class Decomposition:
    summands: list[HModule]
    complete: bool  # False when a split was blocked over Q(i)

    @property
    def dims(self):
        return sorted(s.dim for s in self.summands)


def decompose(m: HModule) -> Decomposition:
    """Split into indecomposable summands where Q(i)-idempotents exist."""
    end, radical = endomorphism_data(m)
    if len(end) - len(radical) == 1:
        return Decomposition([m], True)
    e = _splitting_idempotent(m, end, radical)
    if e is None:
        return Decomposition([m], False)
    part1, part2 = _split_by_idempotent(m, e)
    d1 = decompose(part1)
    d2 = decompose(part2)
    return Decomposition(d1.summands + d2.summands, d1.complete and d2.complete)


def _candidate_endomorphisms(end: list[ExactMatrix]):
    for T in end:
        yield T
    k = len(end)
    for j in range(1, k + 3):
        acc = ExactMatrix.zeros(end[0].rows, end[0].cols)
        w = 1
        for T in end:
            acc = acc + T.scale(GQ(w))
            w *= j + 1
        yield acc


def _splitting_idempotent(m: HModule, end, radical):
    """An exact nontrivial idempotent in End(M), or None.

    Takes candidates u, computes the minimal polynomial of u modulo the
    radical, factors it over Q(i); two coprime factors F, G give the
    exact idempotent (sG)(u) lifted through the radical.
    """
    span = Subspace(m.dim * m.dim)
    for r in radical:
        span.add(r.entries)
    eye = ExactMatrix.identity(m.dim)
    for u in _candidate_endomorphisms(end):
        p = minimal_polynomial(u, reduce_mod=span)
        factors = factor_over_gaussian_rationals(p)
        if len(factors) < 2:
            continue
        f0, mult0 = factors[0]
        F = f0
        for _ in range(mult0 - 1):
            F = poly_mul(F, f0)
        G = [ONE]
        for f, mult in factors[1:]:
            for _ in range(mult):
                G = poly_mul(G, f)
        g, s, t = poly_xgcd(F, G)
        assert len(g) == 1  # coprime parts
        e0 = poly_eval_matrix(poly_mul(t, G), u).scale(g[0].inverse())
        e = lift_idempotent(e0, radical)
        if not e.is_zero() and e != eye:
            return e
    return None


def _split_by_idempotent(m: HModule, e: ExactMatrix):
    """Base change splitting M = im(e) + ker(e) into two HModules."""
    img = Subspace(m.dim)
    img_cols = []
    for c in range(m.dim):
        col = e.col(c)
        if img.add(col):
            img_cols.append(col)
    ker = kernel_basis(e)
    cols = img_cols + ker
    assert len(cols) == m.dim
    P = ExactMatrix.from_rows(cols).transpose()
    Pinv = invert(P)
    assert Pinv is not None
    k = len(img_cols)

    def restrict(mat: ExactMatrix):
        conj = Pinv * mat * P
        top = ExactMatrix.from_rows([[conj[r, c] for c in range(k)] for r in range(k)])
        bot = ExactMatrix.from_rows(
            [[conj[r, c] for c in range(k, m.dim)] for r in range(k, m.dim)]
        )
        for r in range(k):
            for c in range(k, m.dim):
                assert not conj[r, c]
        for r in range(k, m.dim):
            for c in range(k):
                assert not conj[r, c]
        return top, bot

    h1, h2, a1, a2 = {}, {}, [], []
    for g in m.datum.group.gens:
        top, bot = restrict(m.h_gens[g])
        h1[g], h2[g] = top, bot
    for i in range(m.datum.rack.size):
        top, bot = restrict(m.rho_a(i))
        a1.append(top)
        a2.append(bot)
    return (
        HModule(m.datum, k, h1, a1, name=f"{m.name}|im"),
        HModule(m.datum, m.dim - k, h2, a2, name=f"{m.name}|ker"),
    )


def build_extension(m: HModule, n: HModule, blocks: list[ExactMatrix], name="") -> HModule:
    """Module on N + M with group acting block-diagonally and a_i by
    [[a_i^N, F_i], [0, a_i^M]]; realizes a cocycle F as an extension of
    M by N (N is the submodule on the first coordinates)."""
    d = m.datum
    dim = n.dim + m.dim

    def blockdiag(a: ExactMatrix, b: ExactMatrix):
        out = ExactMatrix.zeros(dim, dim)
        ent = out.entries
        for r in range(a.rows):
            for c in range(a.cols):
                ent[r * dim + c] = a[r, c]
        for r in range(b.rows):
            for c in range(b.cols):
                ent[(n.dim + r) * dim + (n.dim + c)] = b[r, c]
        return out

    h_gens = {g: blockdiag(n.h_gens[g], m.h_gens[g]) for g in d.group.gens}
    a_acts = []
    for i in range(d.rack.size):
        mat = blockdiag(n.rho_a(i), m.rho_a(i))
        ent = mat.entries
        F = blocks[i]
        for r in range(n.dim):
            for c in range(m.dim):
                ent[r * dim + (n.dim + c)] = F[r, c]
        a_acts.append(mat)
    return HModule(d, dim, h_gens, a_acts, name=name or "extension")


def induce(table, w_dim: int, w_gens: dict, name: str = "") -> HModule:
    """Induced module H (x)_{kG} W on (monomial basis) x W.

    w_gens maps the group generators to their matrices on W; the action
    of H(Q) is left multiplication in the table followed by absorbing
    the group letter into W.
    """
    d = table.datum
    G = d.group
    # full representation of W
    words = G.factor_words()
    rho_w: list[ExactMatrix] = []
    for t in range(G.order):
        acc = ExactMatrix.identity(w_dim)
        for g in words[t]:
            acc = acc * w_gens[g]
        rho_w.append(acc)

    n_words = len(table.monomials)
    dim = n_words * w_dim
    g_ord = G.order

    def action_of(vec: dict) -> ExactMatrix:
        out = ExactMatrix.zeros(dim, dim)
        ent = out.entries
        for p in range(n_words):
            src = table.index_of(table.monomials[p], G.identity)
            prod = table.mul_vec(vec, {src: ONE})
            for k, c in prod.items():
                q, t = k // g_ord, k % g_ord
                rw = rho_w[t]
                for r in range(w_dim):
                    for s in range(w_dim):
                        v = rw[r, s]
                        if v:
                            row = q * w_dim + r
                            col = p * w_dim + s
                            ent[row * dim + col] = ent[row * dim + col] + c * v
        return out

    h_gens = {g: action_of(table.generator_vector("H", g)) for g in G.gens}
    a_acts = [
        action_of(table.generator_vector("a", i)) for i in range(d.rack.size)
    ]
    return HModule(d, dim, h_gens, a_acts, name=name or "induced")


@dataclass
class CoverCertificate:
    cover: str
    simple: str
    indecomposable: bool
    has_surjection: bool
    is_summand_of_induced: bool
    induced_dim: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def certify_projective_cover(p: HModule, s: HModule, table) -> CoverCertificate:
    """Certificate that p is the projective cover of the simple s.

    Three legs: p is indecomposable with local endomorphisms; p maps
    onto s; and p is a direct summand of the (projective) module induced
    from the restriction of s, detected through compositions of Hom
    bases escaping the radical of End(p).
    """
    failures = []
    indec = is_indecomposable(p)
    if indec is not True:
        failures.append("p is not certified indecomposable")

    homs_ps = hom_space(p, s)
    has_surj = any(rank(T) == s.dim for T in homs_ps)
    if not has_surj:
        failures.append("no surjection p ->> s")

    induced = induce(table, s.dim, s.h_gens, name=f"I({s.name})")
    pi = hom_space(induced, p)
    sigma = hom_space(p, induced)
    end_p, rad_p = endomorphism_data(p)
    span = Subspace(p.dim * p.dim)
    for r in rad_p:
        span.add(r.entries)
    summand = False
    for a in pi:
        for b in sigma:
            if not span.contains((a * b).entries):
                summand = True
                break
        if summand:
            break
    if not summand:
        failures.append("p is not a direct summand of the induced module")
    return CoverCertificate(
        cover=p.name,
        simple=s.name,
        indecomposable=indec is True,
        has_surjection=has_surj,
        is_summand_of_induced=summand,
        induced_dim=induced.dim,
        failures=failures,
    )


def module_to_json(m: HModule) -> dict:
    from .scalars import format_gq

    def mat(mx: ExactMatrix):
        return [[format_gq(mx[r, c]) for c in range(mx.cols)] for r in range(mx.rows)]

    return {
        "name": m.name,
        "dim": m.dim,
        "H": {m.datum.group.label(g): mat(mx) for g, mx in sorted(m.h_gens.items())},
        "a": {m.datum.rack.labels[i]: mat(mx) for i, mx in enumerate(m.a_acts)},
    }


def module_from_json(datum: QlDatum, doc: dict) -> HModule:
    from .scalars import parse_gq

    def mat(rows):
        return ExactMatrix.from_rows([[parse_gq(x) for x in row] for row in rows])

    label_to_gen = {datum.group.label(g): g for g in datum.group.gens}
    h_gens = {label_to_gen[k]: mat(v) for k, v in doc["H"].items()}
    a_acts = [mat(doc["a"][lab]) for lab in datum.rack.labels]
    return HModule(datum, int(doc["dim"]), h_gens, a_acts, name=doc.get("name", ""))
