"""The concrete module catalog over the two 72-dimensional S_3 liftings.

Modules are entered exactly as printed in their defining bases: the
group part is assembled from the one-dimensional characters and the
standard 2-dimensional representation, and only the action of a_(12)
is transcribed; a_(13) and a_(23) are generated by conjugation, which
both minimizes transcription risk and exercises the braided relations.
Every entry is re-verified against the full relation set by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hmodules import HModule, induce, tensor
from .linalg import ExactMatrix
from .qldata import QlDatum, cached_builtin
from .scalars import GQ, I, MINUS_ONE, ONE, ZERO, gq_sqrt

TWO_I = GQ(0, 2)
I3 = GQ(0, "1/3")


def a0_datum() -> QlDatum:
    return cached_builtin("Q3_minus", lam=0)


def a1_datum() -> QlDatum:
    return cached_builtin("Q3_minus", lam=1)


def theta_label(z: GQ) -> str:
    """Compact labels for Gaussian rationals in module names: i, -i/3, 2i."""
    if not z.im and not z.re:
        return "0"
    if not z.im:
        return str(z.re)
    if z.re:
        raise ValueError("no pretty label for mixed scalars")
    p, q = z.im.numerator, z.im.denominator
    sign = "-" if p < 0 else ""
    mag = "" if abs(p) == 1 else str(abs(p))
    den = "" if q == 1 else f"/{q}"
    return f"{sign}{mag}i{den}"


# -- standard S_3 representation and the G-module building blocks -----------


def standard_rep() -> dict[str, ExactMatrix]:
    """The three 2x2 matrices of the standard representation on {v, w}."""
    return {
        "(12)": ExactMatrix.from_rows([[0, 1], [1, 0]]),
        "(23)": ExactMatrix.from_rows([[1, 0], [-1, -1]]),
        "(13)": ExactMatrix.from_rows([[-1, -1], [0, 1]]),
    }


def _gen_index(datum: QlDatum, label: str) -> int:
    for g in datum.group.gens:
        if datum.group.label(g) == label:
            return g
    raise KeyError(label)


def g_module_eps(datum: QlDatum):
    return 1, {g: ExactMatrix.identity(1) for g in datum.group.gens}


def g_module_sg(datum: QlDatum):
    return 1, {g: ExactMatrix.from_rows([[-1]]) for g in datum.group.gens}


def g_module_st(datum: QlDatum):
    mats = standard_rep()
    return 2, {
        _gen_index(datum, "(12)"): mats["(12)"],
        _gen_index(datum, "(23)"): mats["(23)"],
    }


def _blockdiag(mats):
    dim = sum(m.rows for m in mats)
    out = ExactMatrix.zeros(dim, dim)
    off = 0
    for m in mats:
        for r in range(m.rows):
            for c in range(m.cols):
                out.entries[(off + r) * dim + (off + c)] = m[r, c]
        off += m.rows
    return out


def _h_gens_blocks(datum: QlDatum, kinds: str) -> dict:
    """Group generator matrices for a basis ordered by isotype letters:
    'e' = trivial, 's' = sign, 't' = one standard block (v, w)."""
    builders = {"e": g_module_eps, "s": g_module_sg, "t": g_module_st}
    out = {}
    for g in datum.group.gens:
        out[g] = _blockdiag([builders[k](datum)[1][g] for k in kinds])
    return out


def module_from_a12(datum: QlDatum, h_gens: dict, a12: ExactMatrix, name: str) -> HModule:
    """Complete a module from the a_(12) action: the other rack letters
    act by a_{t.l} = chi_l(t)^{-1} H_t a_l H_t^{-1}."""
    dim = a12.rows
    probe = HModule(datum, dim, h_gens, [ExactMatrix.zeros(dim, dim)] * datum.rack.size)
    base = 0  # rack index of (12)
    a_acts: list[ExactMatrix | None] = [None] * datum.rack.size
    a_acts[base] = a12
    for t in range(datum.group.order):
        target = datum.act(t, base)
        if a_acts[target] is None:
            rt = probe.rho(t)
            rti = probe.rho(datum.group.inv(t))
            a_acts[target] = (rt * a12 * rti).scale(datum.chi_of(base, t).inverse())
    assert all(m is not None for m in a_acts)
    return HModule(datum, dim, h_gens, a_acts, name=name)


# -- catalog entries ----------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    module: HModule
    expected: dict = field(default_factory=dict)


def simple_1dim(datum: QlDatum, which: str) -> HModule:
    """S_eps or S_sg: the character extended by zero on the rack letters."""
    sign = ONE if which == "eps" else MINUS_ONE
    h_gens = {g: ExactMatrix.from_rows([[sign]]) for g in datum.group.gens}
    zero = ExactMatrix.zeros(1, 1)
    return HModule(datum, 1, h_gens, [zero] * datum.rack.size, name=f"S_{which}")


def simple_st(datum: QlDatum, alpha: GQ, beta: GQ, name: str | None = None) -> HModule:
    """Two-dimensional module on the standard representation with
    a_(12) v = alpha v + beta w."""
    a12 = ExactMatrix.from_rows([[alpha, -beta], [beta, -alpha]])
    label = name or f"S_st({theta_label(alpha)})"
    return module_from_a12(datum, _h_gens_blocks(datum, "t"), a12, label)


def st_module(datum: QlDatum, theta: GQ) -> HModule:
    """S_st(theta): beta = -alpha on the +-i branch, beta = alpha on +-i/3."""
    beta = theta if theta.norm() < 1 else -theta
    return simple_st(datum, theta, beta)


def simples(lam: int) -> list[CatalogEntry]:
    if lam == 0:
        d = a0_datum()
        zero2 = ExactMatrix.zeros(2, 2)
        st = HModule(d, 2, _h_gens_blocks(d, "t"), [zero2] * 3, name="S_st")
        return [
            CatalogEntry("S_eps", simple_1dim(d, "eps"),
                         {"simple": True, "isotypic": {"eps": 1, "sg": 0, "st": 0}}),
            CatalogEntry("S_sg", simple_1dim(d, "sg"),
                         {"simple": True, "isotypic": {"eps": 0, "sg": 1, "st": 0}}),
            CatalogEntry("S_st", st,
                         {"simple": True, "isotypic": {"eps": 0, "sg": 0, "st": 1}}),
        ]
    if lam == 1:
        d = a1_datum()
        thetas = [I, -I, I3, -I3]
        out = [
            CatalogEntry("S_eps", simple_1dim(d, "eps"), {"simple": True}),
            CatalogEntry("S_sg", simple_1dim(d, "sg"), {"simple": True}),
        ]
        for th in thetas:
            out.append(
                CatalogEntry(f"S_st({theta_label(th)})", st_module(d, th),
                             {"simple": True, "isotypic": {"eps": 0, "sg": 0, "st": 1}})
            )
        return out
    raise ValueError("lam must be 0 or 1")


def module_3dim_eps(datum, beta, a, c, d, name) -> HModule:
    """Basis (x, v, w) with x trivial; a_(12) columns per the frame
    x -> beta (v - w), v -> a x + c v + d w, w -> -a x - d v - c w."""
    a12 = ExactMatrix.from_rows(
        [[ZERO, a, -a], [beta, c, -d], [-beta, d, -c]]
    )
    return module_from_a12(datum, _h_gens_blocks(datum, "et"), a12, name)


def module_3dim_sg(datum, eta, b, c, d, name) -> HModule:
    """Basis (y, v, w) with y the sign character; a_(12) columns
    y -> eta (v + w), v -> b y + c v + d w, w -> b y - d v - c w."""
    a12 = ExactMatrix.from_rows(
        [[ZERO, b, b], [eta, c, -d], [eta, d, -c]]
    )
    return module_from_a12(datum, _h_gens_blocks(datum, "st"), a12, name)


def indecomposables3(lam: int) -> list[CatalogEntry]:
    if lam == 0:
        d = a0_datum()
        z = ZERO
        mods = [
            ("M_{st,eps}", module_3dim_eps(d, z, ONE, z, z, "M_{st,eps}")),
            ("M_{st,sg}", module_3dim_sg(d, z, ONE, z, z, "M_{st,sg}")),
            ("M_{eps,st}", module_3dim_eps(d, ONE, z, z, z, "M_{eps,st}")),
            ("M_{sg,st}", module_3dim_sg(d, ONE, z, z, z, "M_{sg,st}")),
        ]
    elif lam == 1:
        d = a1_datum()
        z = ZERO
        mods = []
        for sgn in (ONE, MINUS_ONE):
            th = sgn * I3
            lbl = theta_label(th)
            mods.append((f"M_{{st,eps}}[{lbl}]",
                         module_3dim_eps(d, z, ONE, th, th, f"M_{{st,eps}}[{lbl}]")))
        for sgn in (ONE, MINUS_ONE):
            th = sgn * I
            lbl = theta_label(th)
            mods.append((f"M_{{st,sg}}[{lbl}]",
                         module_3dim_sg(d, z, ONE, th, -th, f"M_{{st,sg}}[{lbl}]")))
        for sgn in (ONE, MINUS_ONE):
            th = sgn * I
            lbl = theta_label(th)
            mods.append((f"M_{{eps,st}}[{lbl}]",
                         module_3dim_eps(d, ONE, z, th, -th, f"M_{{eps,st}}[{lbl}]")))
        for sgn in (ONE, MINUS_ONE):
            th = sgn * I3
            lbl = theta_label(th)
            mods.append((f"M_{{sg,st}}[{lbl}]",
                         module_3dim_sg(d, ONE, z, th, th, f"M_{{sg,st}}[{lbl}]")))
    else:
        raise ValueError("lam must be 0 or 1")
    return [CatalogEntry(n, m, {"indecomposable": True}) for n, m in mods]


def module_4dim(datum, alpha, beta, gamma, eta, a, b, theta, name=None) -> HModule:
    """The 4-dimensional frame on (x, y, v, w) with c = theta and
    d = theta on the +-i/3 branch, d = -theta on the +-i branch."""
    c = theta
    d = theta if theta.norm() < 1 else -theta
    a12 = ExactMatrix.from_rows(
        [
            [ZERO, gamma, a, -a],
            [alpha, ZERO, b, b],
            [beta, eta, c, -d],
            [-beta, eta, d, -c],
        ]
    )
    label = name or m4_name(alpha, beta, gamma, eta, a, b, theta)
    return module_from_a12(datum, _h_gens_blocks(datum, "est"), a12, label)


def m4_name(alpha, beta, gamma, eta, a, b, theta) -> str:
    params = ",".join(theta_label(x) for x in (alpha, beta, gamma, eta, a, b))
    return f"M({params})[{theta_label(theta)}]"


def indecomposables4() -> list[CatalogEntry]:
    """The eight 4-dimensional indecomposables over the nontrivial lifting:
    the four parameter tuples on theta = i/3 and the four on theta = i."""
    d = a1_datum()
    z, one = ZERO, ONE
    third = [
        (z, z, one, z, one, z),
        (z, z, one, one, z, z),
        (one, z, z, z, -2 * I3, one),
        (one, one, z, -2 * I3, z, z),
    ]
    full = [
        (one, z, z, z, z, one),
        (one, one, z, z, z, z),
        (z, -TWO_I, one, one, z, z),
        (z, z, one, z, one, -TWO_I),
    ]
    out = []
    for params in third:
        out.append(CatalogEntry(m4_name(*params, I3), module_4dim(d, *params, I3),
                                {"indecomposable": True}))
    for params in full:
        out.append(CatalogEntry(m4_name(*params, I), module_4dim(d, *params, I),
                                {"indecomposable": True}))
    return out


def p_st_i(datum: QlDatum) -> HModule:
    """The 6-dimensional projective cover of S_st(i), from its printed
    a_(12) matrix on the basis (x, y, u, t, v, w)."""
    i = I
    a12 = ExactMatrix.from_rows(
        [
            [0 * i, ONE, ZERO, ZERO, ONE, -ONE],
            [ZERO, ZERO, ZERO, ZERO, -2 * i, -2 * i],
            [2 * i, ONE, -i, -i, ONE, -ONE],
            [-2 * i, ONE, i, i, ONE, -ONE],
            [ZERO, ZERO, ZERO, ZERO, i, i],
            [ZERO, ZERO, ZERO, ZERO, -i, -i],
        ]
    )
    return module_from_a12(datum, _h_gens_blocks(datum, "estt"), a12, "P_st(i)")


def projectives(lam: int, table) -> list[tuple[CatalogEntry, CatalogEntry]]:
    """(cover, simple) pairs for the full projective cover census.

    The I_chi are constructed by induction from the table; over the
    nontrivial lifting the four P_st twists come from the printed
    6-dimensional module and its sign twists."""
    d = table.datum
    out = []
    eps = simple_1dim(d, "eps")
    sg = simple_1dim(d, "sg")
    i_eps = induce(table, 1, eps.h_gens, name="I_eps")
    i_sg = induce(table, 1, sg.h_gens, name="I_sg")
    out.append((CatalogEntry("I_eps", i_eps), CatalogEntry("S_eps", eps)))
    out.append((CatalogEntry("I_sg", i_sg), CatalogEntry("S_sg", sg)))
    if lam == 0:
        zero2 = ExactMatrix.zeros(2, 2)
        st = HModule(d, 2, _h_gens_blocks(d, "t"), [zero2] * 3, name="S_st")
        i_st = induce(table, 2, st.h_gens, name="I_st")
        out.append((CatalogEntry("I_st", i_st), CatalogEntry("S_st", st)))
        return out
    p = p_st_i(d)
    twists = [
        ("P_st(i)", p, st_module(d, I)),
        ("P_st(-i/3)", tensor(p, sg), st_module(d, -I3)),
        ("P_st(i/3)", tensor(sg, p), st_module(d, I3)),
        ("P_st(-i)", tensor(sg, tensor(p, sg)), st_module(d, -I)),
    ]
    for name, cover, simple in twists:
        cover.name = name
        out.append((CatalogEntry(name, cover),
                    CatalogEntry(simple.name, simple)))
    return out


def p1_family(a: GQ, b: GQ) -> CatalogEntry:
    """Self-extension M_{(a,b)} of the standard simple over the graded
    algebra: a_(12) v2 = a v1 + b w1 on the basis (v1, w1, v2, w2)."""
    if not a and not b:
        raise ValueError("the split case (0,0) is excluded")
    d = a0_datum()
    a12 = ExactMatrix.from_rows(
        [
            [ZERO, ZERO, a, -b],
            [ZERO, ZERO, b, -a],
            [ZERO, ZERO, ZERO, ZERO],
            [ZERO, ZERO, ZERO, ZERO],
        ]
    )
    name = f"M_({theta_label(a)},{theta_label(b)})"
    return CatalogEntry(
        name,
        module_from_a12(d, _h_gens_blocks(d, "tt"), a12, name),
        {"indecomposable": True},
    )


def st_solutions(lam: int = 1) -> list[tuple[GQ, GQ]]:
    """All scalar pairs (alpha, beta) with beta^2 = alpha^2,
    alpha beta = beta alpha and -5 alpha^2 - 4 alpha beta = 1, solved
    exhaustively over Q(i) through the two branches beta = -+alpha."""
    if lam != 1:
        raise ValueError("the eigenvalue law is a feature of the lifting at lam=1")
    solutions = []
    # beta = -alpha: -alpha^2 = 1
    r = gq_sqrt(MINUS_ONE)
    assert r is not None
    for alpha in (r, -r):
        solutions.append((alpha, -alpha))
    # beta = alpha: -9 alpha^2 = 1
    r = gq_sqrt(GQ("-1/9"))
    assert r is not None
    for alpha in (r, -r):
        solutions.append((alpha, alpha))
    return solutions


# -- expected fusion table ----------------------------------------------------

_ST_THETAS = ("i", "-i", "i/3", "-i/3")


def _st(t: str) -> str:
    return f"S_st({t})"


def fusion_expected() -> dict[tuple[str, str], str]:
    """Expected isomorphism class of every ordered tensor product of
    the six simple modules over the nontrivial lifting."""
    table: dict[tuple[str, str], str] = {}
    names = ["S_eps", "S_sg"] + [_st(t) for t in _ST_THETAS]
    for n in names:
        table[("S_eps", n)] = n
        table[(n, "S_eps")] = n
    table[("S_sg", "S_sg")] = "S_eps"
    # sign twist from the left: same sign, the other magnitude
    left = {"i": "i/3", "i/3": "i", "-i": "-i/3", "-i/3": "-i"}
    # sign twist from the right: opposite sign, the other magnitude
    right = {"i": "-i/3", "i/3": "-i", "-i": "i/3", "-i/3": "i"}
    for t in _ST_THETAS:
        table[("S_sg", _st(t))] = _st(left[t])
        table[(_st(t), "S_sg")] = _st(right[t])
    lines = [
        ("i", "i", "-i/3", "i/3", "M(0,2i,1,1,0,0)[-i]"),
        ("i", "-i", "-i/3", "-i/3", "M(1,0,0,0,-2i/3,1)[i/3]"),
        ("i", "i/3", "-i/3", "i", "M(0,0,1,0,1,2i)[-i]"),
        ("i", "-i/3", "-i/3", "-i", "M(1,1,0,-2i/3,0,0)[i/3]"),
        ("-i", "i", "i/3", "i/3", "M(1,0,0,0,2i/3,1)[-i/3]"),
        ("-i", "-i", "i/3", "-i/3", "M(0,-2i,1,1,0,0)[i]"),
        ("-i", "i/3", "i/3", "i", "M(1,1,0,2i/3,0,0)[-i/3]"),
        ("-i", "-i/3", "i/3", "-i", "M(0,0,1,0,1,-2i)[i]"),
    ]
    for t1, t2, t3, t4, target in lines:
        table[(_st(t1), _st(t2))] = target
        table[(_st(t3), _st(t4))] = target
    return table


def parse_theta(label: str) -> GQ:
    sign = ONE
    s = label
    if s.startswith("-"):
        sign = MINUS_ONE
        s = s[1:]
    if s == "0":
        return ZERO
    if "i" not in s:
        return sign * GQ(s)
    num, _, den = s.partition("i")
    coeff = GQ(int(num) if num else 1)
    if den:
        coeff = coeff / GQ(int(den[1:]))
    return sign * coeff * I


def catalog_module(datum: QlDatum, name: str) -> HModule:
    """Resolve a module name from the fusion table into an HModule."""
    if name == "S_eps":
        return simple_1dim(datum, "eps")
    if name == "S_sg":
        return simple_1dim(datum, "sg")
    if name.startswith("S_st(") and name.endswith(")"):
        return st_module(datum, parse_theta(name[5:-1]))
    if name.startswith("M(") and name.endswith("]"):
        params, _, theta = name[2:-1].partition(")[")
        vals = [parse_theta(p) for p in params.split(",")]
        return module_4dim(datum, *vals, parse_theta(theta), name=name)
    raise KeyError(f"unknown catalog module {name!r}")
