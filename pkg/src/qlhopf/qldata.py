"""Quadratic lifting data over symmetric groups.

A datum bundles a rack X, a 2-cocycle q, a group G acting on X, a
function g: X -> G and characters chi_i: G -> k* realizing (kX, c^q)
over G, plus one deformation scalar per quadratic class in R'.  The
lambda scalars are attached to a class *with its canonical
representative pair*: restarting the class cycle at another pair
rescales the quadratic polynomial by an eta-coefficient, so the
equivariance law lambda_C = q_{k i} q_{k j} lambda_{k>C} has to be read
through that rescaling.  For the constant cocycle -1 all the factors
are 1 and lambda is constant on class sizes; for the inversion cocycle
the consistent assignment alternates in sign across conjugate classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import SymmetricGroup, pinv, pmul, symmetric_group
from .racks import (
    ClassData,
    Cocycle2,
    Rack,
    constant_cocycle,
    enumerate_classes,
    ms_cocycle,
    rack_transposition_perms,
    transposition_rack,
)
from .scalars import GQ, MINUS_ONE, ONE, ZERO, format_gq, gq, parse_gq


@dataclass
class QlDatum:
    """A quadratic lifting datum; treat as immutable after construction."""

    name: str
    group: SymmetricGroup
    rack: Rack
    cocycle: Cocycle2
    g_of: tuple[int, ...]            # rack index -> group element index
    action: tuple[tuple[int, ...], ...]   # action[t][i] = t . i
    chi: tuple[tuple[GQ, ...], ...]  # chi[i][t] = chi_i(t)
    classes: tuple[ClassData, ...]
    lambdas: dict[int, GQ]           # class index -> lambda, R' classes only
    pair_class: dict[tuple[int, int], tuple[int, int]]  # (i,j) -> (class, position)

    def act(self, t: int, i: int) -> int:
        return self.action[t][i]

    def chi_of(self, i: int, t: int) -> GQ:
        return self.chi[i][t]

    def q(self, i: int, j: int) -> GQ:
        return self.cocycle.q(i, j)

    def lam(self, class_index: int) -> GQ:
        return self.lambdas.get(class_index, ZERO)

    def rprime_classes(self) -> list[ClassData]:
        return [c for c in self.classes if c.in_rprime]

    def class_of_pair(self, i: int, j: int) -> tuple[ClassData, int]:
        ci, pos = self.pair_class[(i, j)]
        return self.classes[ci], pos

    def rhs_group(self, c: ClassData) -> int:
        """Index of g_{i_2} g_{i_1} for the canonical representative."""
        i2, i1 = c.rep
        return self.group.mul(self.g_of[i2], self.g_of[i1])

    def chi_i_gi(self, i: int) -> GQ:
        return self.chi[i][self.g_of[i]]


def rotated_coefficients(c: ClassData, m: int, cocycle: Cocycle2) -> dict:
    """Coefficients of the class polynomial written from the m-th pair
    (1-based): maps each pair (i_{h+1}, i_h) to its coefficient."""
    rotated = list(c.pairs[m - 1 :]) + list(c.pairs[: m - 1])
    i_seq = [rotated[0][1]] + [p[0] for p in rotated]
    coeffs = {rotated[0]: ONE}
    acc = ONE
    for h in range(2, c.size + 1):
        acc = acc * cocycle.q(i_seq[h - 1], i_seq[h - 2])
        sign = ONE if (h + 1) % 2 == 0 else MINUS_ONE
        coeffs[rotated[h - 1]] = sign * acc
    return coeffs


def class_shift_factor(c: ClassData, m: int, cocycle: Cocycle2) -> GQ:
    """Scalar s with phi^{(pair m)} = s * phi^{(pair 1)}; the two
    polynomials are always proportional for a genuine 2-cocycle."""
    if m == 1:
        return ONE
    base = rotated_coefficients(c, 1, cocycle)
    rot = rotated_coefficients(c, m, cocycle)
    s = rot[c.pairs[0]] / base[c.pairs[0]]
    for p in c.pairs:
        if rot[p] != s * base[p]:
            raise ValueError(
                f"class {c.index}: polynomial not proportional under restart"
            )
    return s


def lambda_at_pair(datum: QlDatum, class_index: int, position: int) -> GQ:
    """The deformation scalar as seen from the class pair at the given
    1-based position (canonical lambda rescaled by the restart factor)."""
    c = datum.classes[class_index]
    return class_shift_factor(c, position, datum.cocycle) * datum.lam(class_index)


# -- construction of the built-in families -----------------------------------


def _sn_realization(n: int, cocycle: Cocycle2, chi_fn):
    group = symmetric_group(n)
    rack = transposition_rack(n)
    perms = rack_transposition_perms(n)
    g_of = tuple(group.index[p] for p in perms)
    rack_index = {p: k for k, p in enumerate(perms)}
    action = []
    for t in group.elements:
        row = []
        for p in perms:
            row.append(rack_index[pmul(pmul(t, p), pinv(t))])
        action.append(tuple(row))
    chi = tuple(
        tuple(chi_fn(i, t) for t in group.elements) for i in range(rack.size)
    )
    return group, rack, g_of, tuple(action), chi


def _assemble(name, group, rack, cocycle, g_of, action, chi, lambdas) -> QlDatum:
    classes = []
    pair_class: dict[tuple[int, int], tuple[int, int]] = {}
    for c in enumerate_classes(rack, cocycle):
        i2, i1 = c.rep
        rhs = group.mul(g_of[i2], g_of[i1])
        c = ClassData(
            index=c.index,
            pairs=c.pairs,
            i_seq=c.i_seq,
            eta=c.eta,
            zeta=c.zeta,
            in_rprime=c.in_rprime,
            cocycle_product=c.cocycle_product,
            rhs_group_element=rhs,
        )
        classes.append(c)
        for pos, p in enumerate(c.pairs, start=1):
            pair_class[p] = (c.index, pos)
    return QlDatum(
        name=name,
        group=group,
        rack=rack,
        cocycle=cocycle,
        g_of=g_of,
        action=action,
        chi=chi,
        classes=tuple(classes),
        lambdas=lambdas,
        pair_class=pair_class,
    )


def _transport_lambdas(datum_wo_lambda: QlDatum, base_value: GQ, size: int) -> dict[int, GQ]:
    """Assign base_value to the first R'-class of the given size and
    propagate through the X-action by the equivariance law; raises if
    the orbit forces inconsistent values."""
    d = datum_wo_lambda
    targets = [c for c in d.classes if c.in_rprime and c.size == size]
    if not targets:
        return {}
    values: dict[int, GQ] = {targets[0].index: base_value}
    frontier = [targets[0].index]
    while frontier:
        ci = frontier.pop()
        c = d.classes[ci]
        i2, i1 = c.rep
        for k in range(d.rack.size):
            moved = (d.rack.op(k, i2), d.rack.op(k, i1))
            dj, pos = d.pair_class[moved]
            target = d.classes[dj]
            # lambda_C = q_{k i2} q_{k i1} * (shift(pos) * lambda_D)
            factor = d.q(k, i2) * d.q(k, i1) * class_shift_factor(
                target, pos, d.cocycle
            )
            value = values[ci] / factor
            if dj in values:
                if values[dj] != value:
                    raise ValueError(
                        f"inconsistent lambda transport into class {dj}"
                    )
            else:
                values[dj] = value
                frontier.append(dj)
    return values


def build_builtin(name: str, n: int | None = None, **params) -> QlDatum:
    """Construct one of the three S_n families.

    Q3_minus(lam):      S_3, constant cocycle -1, lambda on the 3-classes.
    Qn_minus(Lam, Gam): S_n (n>=4), cocycle -1, Lam on 2-classes, Gam on
                        3-classes.
    Qn_chi(lam):        S_n (n>=4), inversion cocycle, lambda on the
                        3-classes up to the forced transport signs.
    Singleton classes always carry 0 (their group element squares to e).
    """
    if name == "Q3_minus":
        if n not in (None, 3):
            raise ValueError("Q3_minus is defined over S_3")
        n = 3
        lam = gq(params.pop("lam", 0))
        _no_extra(params)
        cocycle = constant_cocycle(transposition_rack(3), MINUS_ONE)
        group, rack, g_of, action, chi = _sn_realization(3, cocycle, _sign_chi(3))
        d = _assemble(f"Q3_minus[{format_gq(lam)}]", group, rack, cocycle,
                      g_of, action, chi, {})
        d.lambdas.update({c.index: lam for c in d.classes
                          if c.in_rprime and c.size == 3})
        return d
    if name == "Qn_minus":
        if n is None or n < 4:
            raise ValueError("Qn_minus needs n >= 4")
        Lam = gq(params.pop("Lam", 0))
        Gam = gq(params.pop("Gam", 0))
        _no_extra(params)
        cocycle = constant_cocycle(transposition_rack(n), MINUS_ONE)
        group, rack, g_of, action, chi = _sn_realization(n, cocycle, _sign_chi(n))
        d = _assemble(
            f"Q{n}_minus[{format_gq(Lam)},{format_gq(Gam)}]",
            group, rack, cocycle, g_of, action, chi, {},
        )
        for c in d.classes:
            if not c.in_rprime:
                continue
            if c.size == 2:
                d.lambdas[c.index] = Lam
            elif c.size == 3:
                d.lambdas[c.index] = Gam
        return d
    if name == "Qn_chi":
        if n is None or n < 4:
            raise ValueError("Qn_chi needs n >= 4")
        lam = gq(params.pop("lam", 0))
        _no_extra(params)
        cocycle = ms_cocycle(n)
        group, rack, g_of, action, chi = _sn_realization(n, cocycle, _ms_chi(n))
        d = _assemble(f"Q{n}_chi[{format_gq(lam)}]", group, rack, cocycle,
                      g_of, action, chi, {})
        d.lambdas.update(_transport_lambdas(d, lam, 3))
        return d
    raise ValueError(f"unknown builtin {name!r}")


def _no_extra(params):
    if params:
        raise ValueError(f"unexpected parameters: {sorted(params)}")


def _sign_chi(n: int):
    group = symmetric_group(n)

    def chi_fn(i: int, t) -> GQ:
        return ONE if group.sign(group.index[t]) > 0 else MINUS_ONE

    return lambda i, t: chi_fn(i, t)


def _ms_chi(n: int):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]

    def chi_fn(i: int, t) -> GQ:
        a, b = pairs[i]
        return ONE if t[a] < t[b] else MINUS_ONE

    return chi_fn


@lru_cache(maxsize=None)
def builtin(name: str, n: int | None = None, *param_items) -> QlDatum:
    """Cached builtin lookup; params passed as sorted (key, str) pairs."""
    return build_builtin(name, n, **{k: parse_gq(v) for k, v in param_items})


def cached_builtin(name: str, n: int | None = None, **params) -> QlDatum:
    items = tuple(sorted((k, format_gq(gq(v))) for k, v in params.items()))
    return builtin(name, n, *items)


# -- validation ---------------------------------------------------------------


@dataclass
class ValidationReport:
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.ok:
            return "valid ql-datum"
        return "invalid ql-datum:\n" + "\n".join(f"  - {f}" for f in self.failures)


def validate(d: QlDatum) -> ValidationReport:
    """Check every defining condition of a ql-datum; failures carry witnesses."""
    bad: list[str] = []
    bad += d.rack.check()
    bad += d.cocycle.check(d.rack)
    G, X = d.group, d.rack.size

    # principal realization: g_{t.i} = t g_i t^-1 and g_i . j = i > j
    for t in range(G.order):
        ti = G.inv(t)
        for i in range(X):
            lhs = d.g_of[d.act(t, i)]
            rhs = G.mul(G.mul(t, d.g_of[i]), ti)
            if lhs != rhs:
                bad.append(f"g is not equivariant at t={G.label(t)}, i={d.rack.labels[i]}")
    for i in range(X):
        for j in range(X):
            if d.act(d.g_of[i], j) != d.rack.op(i, j):
                bad.append(
                    f"g_i . j != i > j at i={d.rack.labels[i]}, j={d.rack.labels[j]}"
                )

    # chi is a 1-cocycle with chi_i(g_j) = q_{ji}
    for i in range(X):
        for h in range(G.order):
            for t in range(G.order):
                ht = G.mul(h, t)
                if d.chi[i][ht] != d.chi[i][t] * d.chi[d.act(t, i)][h]:
                    bad.append(
                        f"1-cocycle law fails for i={d.rack.labels[i]}, "
                        f"h={G.label(h)}, t={G.label(t)}"
                    )
                    break
            else:
                continue
            break
    for i in range(X):
        for j in range(X):
            if d.chi[i][d.g_of[j]] != d.q(j, i):
                bad.append(
                    f"chi_i(g_j) != q_ji at i={d.rack.labels[i]}, j={d.rack.labels[j]}"
                )

    # no g_i is a product g_j g_k
    for i in range(X):
        for j in range(X):
            for k in range(X):
                if d.g_of[i] == G.mul(d.g_of[j], d.g_of[k]):
                    bad.append(
                        f"g_i = g_j g_k at i={d.rack.labels[i]}, "
                        f"j={d.rack.labels[j]}, k={d.rack.labels[k]}"
                    )

    # lambda support and the two deformation conditions
    for ci in d.lambdas:
        if not d.classes[ci].in_rprime:
            bad.append(f"lambda assigned to class {ci} outside R'")
    for c in d.classes:
        if not c.in_rprime:
            continue
        lam_c = d.lam(c.index)
        i2, i1 = c.rep
        if d.group.mul(d.g_of[i2], d.g_of[i1]) == G.identity and lam_c:
            bad.append(f"lambda nonzero on class {c.index} with g_i g_j = e")
        for k in range(X):
            moved = (d.rack.op(k, i2), d.rack.op(k, i1))
            dj, pos = d.pair_class[moved]
            target = d.classes[dj]
            if target.in_rprime != c.in_rprime:
                bad.append(f"R' not stable under the X-action at class {c.index}")
                continue
            expected = d.q(k, i2) * d.q(k, i1) * lambda_at_pair(d, dj, pos)
            if lam_c != expected:
                bad.append(
                    f"lambda equivariance fails: class {c.index}, k={d.rack.labels[k]}: "
                    f"{format_gq(lam_c)} != {format_gq(expected)}"
                )
    return ValidationReport(bad)


# -- JSON round trip ----------------------------------------------------------


def datum_to_json(d: QlDatum) -> dict:
    lam = {}
    for ci, v in sorted(d.lambdas.items()):
        i, j = d.classes[ci].rep
        lam[f"{d.rack.labels[i]},{d.rack.labels[j]}"] = format_gq(v)
    return {
        "name": d.name,
        "group": {
            "n": d.group.n,
            "generators": [list(d.group.elements[g]) for g in d.group.gens],
        },
        "rack": {"labels": list(d.rack.labels), "table": [list(r) for r in d.rack.table]},
        "cocycle": [[format_gq(x) for x in row] for row in d.cocycle.values],
        "g_map": [list(d.group.elements[g]) for g in d.g_of],
        "chi": [[format_gq(x) for x in row] for row in d.chi],
        "lambda": lam,
    }


def datum_from_json(doc: dict) -> QlDatum:
    n = doc["group"]["n"]
    group = symmetric_group(n)
    rack = Rack(
        tuple(doc["rack"]["labels"]),
        tuple(tuple(r) for r in doc["rack"]["table"]),
    )
    cocycle = Cocycle2(
        tuple(tuple(parse_gq(x) for x in row) for row in doc["cocycle"])
    )
    g_of = tuple(group.index[tuple(p)] for p in doc["g_map"])
    chi = tuple(tuple(parse_gq(x) for x in row) for row in doc["chi"])
    # the action is conjugation read back through the (injective) g map
    g_lookup = {g: i for i, g in enumerate(g_of)}
    action = []
    for t in range(group.order):
        ti = group.inv(t)
        row = []
        for i in range(rack.size):
            row.append(g_lookup[group.mul(group.mul(t, g_of[i]), ti)])
        action.append(tuple(row))
    d = _assemble(doc.get("name", "custom"), group, rack, cocycle, g_of,
                  tuple(action), chi, {})
    label_index = {lab: i for i, lab in enumerate(rack.labels)}
    for key, val in doc.get("lambda", {}).items():
        li, lj = key.split(",")
        pair = (label_index[li], label_index[lj])
        ci, pos = d.pair_class[pair]
        if pos != 1:
            raise ValueError(f"lambda key {key} is not a canonical class representative")
        d.lambdas[ci] = parse_gq(val)
    return d
