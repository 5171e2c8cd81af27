"""Structure-constant tables for lifting algebras via exact rewriting.

Elements of H(Q) are written as sums of (a-word, group element) pairs;
normalization pushes all group letters to the right through the braided
commutation rule and reduces a-words by the oriented quadratic
relations.  The quadratic rules alone are not confluent (the S_3 family
needs one cubic consequence), so orientation is followed by a bounded
overlap-resolution pass; soundness never depends on that pass being
clever, because a finished table is audited unconditionally: every
product must land in the span of the candidate basis, every defining
relation must vanish, and the full associativity identity
L(e_i e_j) = L(e_i) L(e_j) is checked for all basis pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .linalg import ExactMatrix, Subspace, kernel_basis
from .qldata import QlDatum
from .relations import relation_set
from .scalars import GQ, ONE, ZERO, format_gq

Word = tuple  # tuple[int, ...] of rack indices
Term = tuple  # (Word, group element index)
Element = dict  # Term -> GQ

# the 12 monomials spanning the S_3 liftings over the group algebra,
# in rack indices 0=(12), 1=(13), 2=(23)
Q3_MONOMIAL_BASIS: tuple[Word, ...] = (
    (),
    (0,), (1,), (2,),
    (0, 1), (0, 2), (1, 2), (1, 0),
    (0, 1, 2), (0, 1, 0), (1, 0, 2),
    (0, 1, 0, 2),
)


class RewritingError(RuntimeError):
    pass


class ClosureError(RuntimeError):
    pass


def el_add(a: Element, b: Element) -> Element:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, ZERO) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def el_scale(a: Element, c: GQ) -> Element:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def push_group(datum: QlDatum, t: int, word: Word) -> tuple[GQ, Word]:
    """Move H_t leftward past an a-word: H_t a_w = coeff a_{t.w} H_t."""
    coeff = ONE
    moved = []
    for l in word:
        coeff = coeff * datum.chi_of(l, t)
        moved.append(datum.act(t, l))
    return coeff, tuple(moved)


def el_mul(datum: QlDatum, a: Element, b: Element) -> Element:
    out: Element = {}
    group = datum.group
    for (w1, t1), c1 in a.items():
        for (w2, t2), c2 in b.items():
            f, moved = push_group(datum, t1, w2)
            key = (w1 + moved, group.mul(t1, t2))
            s = out.get(key, ZERO) + c1 * c2 * f
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _deglex_key(w: Word):
    return (len(w), w)


class Rewriter:
    """Word rewriting with group-carrying right-hand sides.

    rules maps an a-word to the element it rewrites to; reduction is
    leftmost-innermost and every application counts against the step
    limit, so a bad orientation fails fast instead of spinning.
    """

    def __init__(self, datum: QlDatum, rules: dict[Word, Element], step_limit: int = 10000):
        self.datum = datum
        self.rules = dict(rules)
        self.step_limit = step_limit
        self.lengths = sorted({len(w) for w in rules}) if rules else []

    def find_redex(self, word: Word):
        for p in range(len(word)):
            for L in self.lengths:
                if p + L <= len(word) and word[p : p + L] in self.rules:
                    return p, L
        return None

    def reduce(self, e: Element) -> Element:
        group = self.datum.group
        out: Element = {}
        stack = [(k, v) for k, v in e.items()]
        steps = 0
        while stack:
            (word, t), coeff = stack.pop()
            if not coeff:
                continue
            hit = self.find_redex(word)
            if hit is None:
                s = out.get((word, t), ZERO) + coeff
                if s:
                    out[(word, t)] = s
                else:
                    out.pop((word, t), None)
                continue
            steps += 1
            if steps > self.step_limit:
                raise RewritingError(
                    f"step limit {self.step_limit} exceeded; non-terminating orientation?"
                )
            p, L = hit
            prefix, suffix = word[:p], word[p + L :]
            for (w_r, g_r), c_r in self.rules[word[p : p + L]].items():
                f, moved = push_group(self.datum, g_r, suffix)
                stack.append(
                    ((prefix + w_r + moved, group.mul(g_r, t)), coeff * c_r * f)
                )
        return out

    def reduce_word(self, word: Word) -> Element:
        return self.reduce({(word, self.datum.group.identity): ONE})


def oriented_rules(datum: QlDatum, basis: set[Word]) -> dict[Word, Element]:
    """Orient each quadratic relation at its unique non-basis word."""
    rules: dict[Word, Element] = {}
    e = datum.group.identity
    for rel in relation_set(datum).quadratics:
        outside = [(pair, c) for pair, c in rel.terms if pair not in basis]
        if len(outside) != 1:
            raise RewritingError(
                f"class {rel.class_index}: {len(outside)} non-basis words, "
                "cannot orient the relation"
            )
        (lead, lead_c) = outside[0]
        inv = lead_c.inverse()
        rhs: Element = {}
        if rel.lam:
            rhs[((), e)] = rel.lam * inv
            rhs[((), rel.rhs_group)] = -rel.lam * inv
        for pair, c in rel.terms:
            if pair != lead:
                rhs = el_add(rhs, {(pair, e): -c * inv})
        rules[lead] = rhs
    return rules


def complete_rules(
    datum: QlDatum,
    rules: dict[Word, Element],
    basis: set[Word],
    step_limit: int = 10000,
    max_rounds: int = 12,
) -> dict[Word, Element]:
    """Bounded overlap resolution on the oriented rules.

    Resolves overlap and inclusion ambiguities; any non-trivial
    S-element is oriented at its deg-lex leading word (which must carry
    a single group part and must lie outside the candidate basis).
    The table audits make the final answer independent of this pass
    being complete.
    """
    rules = dict(rules)
    group = datum.group
    for _ in range(max_rounds):
        rewriter = Rewriter(datum, rules, step_limit)
        new_rules: dict[Word, Element] = {}
        for u, v in itertools.product(list(rules), repeat=2):
            # (word, position of u, position of v) for each critical ambiguity
            ambiguities = []
            for k in range(1, min(len(u), len(v))):
                if u[len(u) - k :] == v[:k]:  # overlap: u then v sharing k letters
                    ambiguities.append((u + v[k:], 0, len(u) - k))
            if u != v and len(v) < len(u):
                for p in range(len(u) - len(v) + 1):
                    if u[p : p + len(v)] == v:  # inclusion: v inside u
                        ambiguities.append((u, 0, p))
            for w, pos_u, pos_v in ambiguities:
                # expand w once by each rule, then reduce both to normal form
                forms = []
                for lhs, pos in ((u, pos_u), (v, pos_v)):
                    expanded: Element = {}
                    prefix, suffix = w[:pos], w[pos + len(lhs) :]
                    for (w_r, g_r), c_r in rules[lhs].items():
                        f, moved = push_group(datum, g_r, suffix)
                        key = (prefix + w_r + moved, g_r)
                        expanded[key] = expanded.get(key, ZERO) + c_r * f
                    forms.append(rewriter.reduce(expanded))
                diff = el_add(forms[0], el_scale(forms[1], GQ(-1)))
                if not diff:
                    continue
                lead_word = max((k[0] for k in diff), key=_deglex_key)
                lead_terms = [(k, c) for k, c in diff.items() if k[0] == lead_word]
                if len(lead_terms) != 1:
                    raise RewritingError(
                        f"cannot orient derived relation with leading word {lead_word}"
                    )
                if lead_word in basis:
                    raise RewritingError(
                        f"derived relation rewrites basis word {lead_word}; "
                        "candidate basis is not linearly independent"
                    )
                (lw, lt), lc = lead_terms[0]
                inv = lc.inverse()
                t_inv = group.inv(lt)
                rest: Element = {}
                for (w_r, t_r), c_r in diff.items():
                    if (w_r, t_r) == (lw, lt):
                        continue
                    rest[(w_r, group.mul(t_r, t_inv))] = -c_r * inv
                if lead_word not in rules and lead_word not in new_rules:
                    new_rules[lead_word] = rest
        if not new_rules:
            break
        rules.update(new_rules)
        # inter-reduce right-hand sides against the grown system
        rewriter = Rewriter(datum, rules, step_limit)
        rules = {lhs: rewriter.reduce(rhs) for lhs, rhs in rules.items()}
    return rules


def _find_subword(w: Word, sub: Word):
    for p in range(len(w) - len(sub) + 1):
        if w[p : p + len(sub)] == sub:
            return p
    return None


@dataclass
class AlgebraTable:
    """Finite-dimensional algebra by structure constants on word x group."""

    datum: QlDatum
    monomials: tuple[Word, ...]
    dim: int
    mult: list  # mult[i][j] = tuple of (k, coeff)
    unit_index: int
    rules: dict[Word, Element] = field(repr=False, default_factory=dict)

    def index_of(self, word: Word, t: int) -> int:
        return self.monomials.index(word) * self.datum.group.order + t

    def basis_term(self, k: int) -> Term:
        g = self.datum.group.order
        return (self.monomials[k // g], k % g)

    def label(self, k: int) -> str:
        word, t = self.basis_term(k)
        wl = "".join("a" + self.datum.rack.labels[i] for i in word) or "1"
        return f"{wl}|{self.datum.group.label(t)}"

    def mul_basis(self, i: int, j: int):
        return self.mult[i][j]

    def mul_vec(self, x: dict, y: dict) -> dict:
        out: dict[int, GQ] = {}
        for i, a in x.items():
            if not a:
                continue
            row = self.mult[i]
            for j, b in y.items():
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    s = out.get(k, ZERO) + ab * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def generator_vector(self, kind: str, which: int) -> dict:
        """Basis vector of a generator: ('a', i) or ('H', t)."""
        if kind == "a":
            return {self.index_of((which,), self.datum.group.identity): ONE}
        if kind == "H":
            return {self.index_of((), which): ONE}
        raise ValueError(kind)

    def to_json(self) -> dict:
        sc = {}
        for i in range(self.dim):
            for j in range(self.dim):
                entries = self.mult[i][j]
                if entries:
                    sc[f"{i},{j}"] = [[k, format_gq(c)] for k, c in entries]
        return {
            "datum": self.datum.name,
            "dim": self.dim,
            "basis": [self.label(k) for k in range(self.dim)],
            "unit": self.unit_index,
            "structure_constants": sc,
        }


def build_table(
    datum: QlDatum,
    monomials=Q3_MONOMIAL_BASIS,
    step_limit: int = 10000,
    audit: bool = True,
) -> AlgebraTable:
    """Multiplication table on (monomials x G), fully audited.

    Raises ClosureError when a product escapes the candidate span and
    RewritingError when reduction exceeds the step limit or an audit
    fails.
    """
    monomials = tuple(tuple(w) for w in monomials)
    basis = set(monomials)
    if () not in basis:
        raise ValueError("candidate basis must contain the empty word")
    for i in range(datum.rack.size):
        if (i,) not in basis:
            raise ValueError("candidate basis must contain every generator word")
    rules = complete_rules(
        datum, oriented_rules(datum, basis), basis, step_limit=step_limit
    )
    rewriter = Rewriter(datum, rules, step_limit)
    group = datum.group
    g = group.order
    dim = len(monomials) * g
    word_pos = {w: p for p, w in enumerate(monomials)}

    mult = [[None] * dim for _ in range(dim)]
    for (p1, w1), t1 in itertools.product(enumerate(monomials), range(g)):
        i = p1 * g + t1
        for (p2, w2), t2 in itertools.product(enumerate(monomials), range(g)):
            j = p2 * g + t2
            f, moved = push_group(datum, t1, w2)
            raw = {(w1 + moved, group.mul(t1, t2)): f}
            reduced = rewriter.reduce(raw)
            entries = []
            for (w, t), c in sorted(reduced.items(), key=lambda kv: (_deglex_key(kv[0][0]), kv[0][1])):
                if w not in word_pos:
                    raise ClosureError(
                        f"product {monomials[p1]}|{t1} * {monomials[p2]}|{t2} "
                        f"escapes the span at word {w}"
                    )
                entries.append((word_pos[w] * g + t, c))
            mult[i][j] = tuple(entries)

    table = AlgebraTable(
        datum=datum,
        monomials=monomials,
        dim=dim,
        mult=mult,
        unit_index=word_pos[()] * g + group.identity,
        rules=rules,
    )
    if audit:
        audit_unit(table)
        audit_relations(table)
        audit_associativity(table)
    return table


def audit_unit(table: AlgebraTable) -> None:
    u = table.unit_index
    for k in range(table.dim):
        if table.mult[u][k] != ((k, ONE),) or table.mult[k][u] != ((k, ONE),):
            raise RewritingError(f"unit fails at basis element {k}")


def audit_relations(table: AlgebraTable) -> None:
    """Every defining relation evaluates to zero inside the table."""
    d = table.datum
    group = d.group
    rels = relation_set(d)
    H = lambda t: table.generator_vector("H", t)
    A = lambda i: table.generator_vector("a", i)
    mul = table.mul_vec

    for s in range(group.order):
        for t in range(group.order):
            got = mul(H(s), H(t))
            if got != H(group.mul(s, t)):
                raise RewritingError(f"group law fails at {group.label(s)},{group.label(t)}")
    for t in range(group.order):
        for l in range(d.rack.size):
            lhs = mul(H(t), A(l))
            rhs = {k: d.chi_of(l, t) * v for k, v in mul(A(d.act(t, l)), H(t)).items()}
            if lhs != rhs:
                raise RewritingError(
                    f"braided commutation fails at t={group.label(t)}, l={d.rack.labels[l]}"
                )
    for rel in rels.quadratics:
        acc: dict[int, GQ] = {}
        for (i, j), c in rel.terms:
            prod = mul(A(i), A(j))
            for k, v in prod.items():
                s = acc.get(k, ZERO) + c * v
                if s:
                    acc[k] = s
                else:
                    acc.pop(k, None)
        rhs: dict[int, GQ] = {}
        if rel.lam:
            rhs[table.unit_index] = rel.lam
            k = table.index_of((), rel.rhs_group)
            rhs[k] = rhs.get(k, ZERO) - rel.lam
            rhs = {k: v for k, v in rhs.items() if v}
        if acc != rhs:
            raise RewritingError(f"quadratic relation of class {rel.class_index} fails")


def audit_associativity(table: AlgebraTable) -> None:
    """Full check that left multiplication is a homomorphism:
    L(e_i e_j) = L(e_i) L(e_j) for all basis pairs."""
    dim = table.dim
    mult = table.mult
    for i in range(dim):
        row_i = mult[i]
        for j in range(dim):
            prod_ij = row_i[j]
            row_j = mult[j]
            for k in range(dim):
                lhs: dict[int, GQ] = {}
                for m, c in row_j[k]:
                    for p, c2 in row_i[m]:
                        s = lhs.get(p, ZERO) + c * c2
                        if s:
                            lhs[p] = s
                        else:
                            lhs.pop(p, None)
                rhs: dict[int, GQ] = {}
                for m, c in prod_ij:
                    for p, c2 in mult[m][k]:
                        s = rhs.get(p, ZERO) + c * c2
                        if s:
                            rhs[p] = s
                        else:
                            rhs.pop(p, None)
                if lhs != rhs:
                    raise RewritingError(
                        f"associativity fails at triple ({i},{j},{k})"
                    )


def group_algebra_table(datum: QlDatum) -> AlgebraTable:
    """The group algebra kG as a table on the empty word alone; used as
    a semisimple baseline for the radical machinery."""
    g = datum.group.order
    mult = [
        [((datum.group.mul(s, t), ONE),) for t in range(g)] for s in range(g)
    ]
    return AlgebraTable(
        datum=datum,
        monomials=((),),
        dim=g,
        mult=mult,
        unit_index=datum.group.identity,
    )


def regular_traces(table: AlgebraTable) -> list[GQ]:
    """tr(L_{e_m}) for every basis element."""
    out = []
    for m in range(table.dim):
        s = ZERO
        for k in range(table.dim):
            for p, c in table.mult[m][k]:
                if p == k:
                    s = s + c
        out.append(s)
    return out


def algebra_radical(table: AlgebraTable):
    """(dim J, dim A/J, J basis vectors) via the trace form of the
    regular representation: Gram_ij = tr(L_{e_i e_j})."""
    taus = regular_traces(table)
    dim = table.dim
    gram_rows = []
    for i in range(dim):
        row = [ZERO] * dim
        for j in range(dim):
            s = ZERO
            for m, c in table.mult[i][j]:
                t = taus[m]
                if t:
                    s = s + c * t
            row[j] = s
        gram_rows.append(row)
    radical = kernel_basis(ExactMatrix.from_rows(gram_rows))
    return len(radical), dim - len(radical), radical


def radical_nilpotency_index(table: AlgebraTable, radical_vectors, cap: int = 12) -> int:
    """Smallest k with J^k = 0, computed by iterating span products."""
    def to_dict(v):
        return {i: x for i, x in enumerate(v) if x}

    current = [to_dict(v) for v in radical_vectors]
    k = 1
    while current and k <= cap:
        span = Subspace(table.dim)
        nxt = []
        for x in current:
            for y in radical_vectors:
                prod = table.mul_vec(x, to_dict(y))
                vec = [ZERO] * table.dim
                for i, c in prod.items():
                    vec[i] = c
                if span.add(vec):
                    nxt.append(prod)
        current = nxt
        k += 1
    if current:
        raise RuntimeError(f"radical power series did not vanish within {cap} steps")
    return k
