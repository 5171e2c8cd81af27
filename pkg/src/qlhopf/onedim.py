"""Modules built from one-dimensional group characters.

A character of the abelianization extends to the lifting algebra iff a
scalar family gamma on the rack satisfies one linear compatibility (the
braided commutation pushed to scalars) and one quadratic condition per
odd class; extensions between two such one-dimensional modules are cut
out by an explicit linear system in a family f on the rack.  Both
solvers work over any datum in this package, treat the systems exactly
as linear/quadratic algebra over Q(i), and are cross-checked by the
generic Ext machinery on the resulting matrix modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hmodules import HModule, verify_module
from .linalg import ExactMatrix, kernel_basis
from .qldata import QlDatum
from .racks import alpha_beta
from .scalars import GQ, MINUS_ONE, ONE, ZERO, gq_sqrt


@dataclass(frozen=True)
class CharacterExtension:
    """A character rho of G_ab together with the rack scalars gamma."""

    rho_name: str
    rho: tuple[GQ, ...]    # value on every group element
    gamma: tuple[GQ, ...]  # value on every rack element

    @property
    def is_zero_family(self) -> bool:
        return not any(self.gamma)


@dataclass(frozen=True)
class ExtensionSolution:
    f: tuple[GQ, ...]
    source: CharacterExtension  # quotient character (rho, gamma)
    target: CharacterExtension  # submodule character (mu, delta)


@dataclass(frozen=True)
class WordLength:
    ell: tuple[int, ...]
    psi: tuple[GQ, ...]


def gab_characters(datum: QlDatum) -> list[tuple[str, tuple[GQ, ...]]]:
    """The characters of the abelianization pulled back to G; for the
    symmetric groups these are the trivial and the sign character."""
    G = datum.group
    eps = tuple(ONE for _ in range(G.order))
    sg = tuple(ONE if G.sign(t) > 0 else MINUS_ONE for t in range(G.order))
    return [("eps", eps), ("sg", sg)]


def _odd_class_rhs(datum: QlDatum, rho, c) -> GQ:
    i2, i1 = c.rep
    g = datum.group.mul(datum.g_of[i2], datum.g_of[i1])
    return datum.lam(c.index) * (ONE - rho[g])


def extend_character(datum: QlDatum, rho, rho_name: str = "rho") -> list[CharacterExtension]:
    """All extensions of the character rho to the lifting algebra.

    Solves the linear compatibility gamma_j = chi_j(t) gamma_{t.j} and
    imposes the per-class scalar conditions; even classes only constrain
    the data (no gamma), odd classes force gamma_i gamma_j.
    """
    G, X = datum.group, datum.rack.size
    # even-class obstruction: lambda_C (1 - rho(g_i g_j)) = 0
    for c in datum.rprime_classes():
        if c.size % 2 == 0 and _odd_class_rhs(datum, rho, c):
            return []
    rows = []
    for t in range(G.order):
        for j in range(X):
            row = [ZERO] * X
            row[j] = row[j] + ONE
            tj = datum.act(t, j)
            row[tj] = row[tj] - datum.chi_of(j, t)
            if any(row):
                rows.append(row)
    kernel = kernel_basis(ExactMatrix.from_rows(rows)) if rows else [
        [ONE if k == j else ZERO for k in range(X)] for j in range(X)
    ]
    odd = [c for c in datum.rprime_classes() if c.size % 2 == 1]

    def admissible(gamma) -> bool:
        for c in odd:
            i2, i1 = c.rep
            if gamma[i2] * gamma[i1] != _odd_class_rhs(datum, rho, c):
                return False
        return True

    if not kernel:
        gamma = tuple([ZERO] * X)
        return [CharacterExtension(rho_name, tuple(rho), gamma)] if admissible(gamma) else []
    if len(kernel) == 1:
        v = kernel[0]
        # gamma = c*v: collect the forced values of c^2
        c2 = None
        for cl in odd:
            i2, i1 = cl.rep
            prod = v[i2] * v[i1]
            rhs = _odd_class_rhs(datum, rho, cl)
            if not prod:
                if rhs:
                    return []
                continue
            val = rhs / prod
            if c2 is None:
                c2 = val
            elif c2 != val:
                return []
        if c2 is None:
            raise NotImplementedError(
                "unconstrained one-parameter family of extensions"
            )
        root = gq_sqrt(c2)
        if root is None:
            return []  # no solution inside Q(i)
        candidates = {root, -root}
        out = []
        for cand in sorted(candidates, key=str):
            gamma = tuple(cand * x for x in v)
            if admissible(gamma):
                out.append(CharacterExtension(rho_name, tuple(rho), gamma))
        return out
    raise NotImplementedError("gamma solution space of dimension > 1")


def build_S(datum: QlDatum, ext: CharacterExtension) -> HModule:
    """The one-dimensional module H_t -> rho(t), a_i -> gamma_i."""
    h_gens = {g: ExactMatrix.from_rows([[ext.rho[g]]]) for g in datum.group.gens}
    a_acts = [ExactMatrix.from_rows([[c]]) for c in ext.gamma]
    tag = "" if ext.is_zero_family else "^gamma"
    m = HModule(datum, 1, h_gens, a_acts, name=f"S_{ext.rho_name}{tag}")
    report = verify_module(m)
    if not report.ok:
        raise ValueError(f"inconsistent character extension: {report.failures[:3]}")
    return m


def ext_space_1dim(
    datum: QlDatum, src: CharacterExtension, tgt: CharacterExtension
) -> tuple[int, list[ExtensionSolution]]:
    """Extension space of S_src by S_tgt as the exact solution space of
    the linear system in f; representatives are normalized so the first
    nonzero coordinate is 1."""
    G, X = datum.group, datum.rack.size
    rho, gamma = src.rho, src.gamma
    mu, delta = tgt.rho, tgt.gamma
    rows = []
    for t in range(G.order):
        for i in range(X):
            row = [ZERO] * X
            row[i] = row[i] + mu[t]
            ti = datum.act(t, i)
            row[ti] = row[ti] - datum.chi_of(i, t) * rho[t]
            if any(row):
                rows.append(row)
    for c in datum.rprime_classes():
        for (i, j) in c.pairs:
            a_j, b_j = alpha_beta(c, j, datum.chi_i_gi(j))
            a_i, b_i = alpha_beta(c, i, datum.chi_i_gi(i))
            coeff_i = a_j * delta[j] - b_j * gamma[j]
            coeff_j = datum.chi_i_gi(i) * (a_i * delta[i] - b_i * gamma[i])
            row = [ZERO] * X
            row[i] = row[i] + coeff_i
            row[j] = row[j] + coeff_j
            if any(row):
                rows.append(row)
    kernel = kernel_basis(ExactMatrix.from_rows(rows)) if rows else [
        [ONE if k == j else ZERO for k in range(X)] for j in range(X)
    ]
    solutions = []
    for v in kernel:
        lead = next((x for x in v if x), None)
        if lead is not None:
            v = [x / lead for x in v]
        solutions.append(ExtensionSolution(tuple(v), src, tgt))
    return len(kernel), solutions


def build_M(datum: QlDatum, sol: ExtensionSolution) -> HModule:
    """Two-dimensional extension module on (z, w): a_i z = gamma_i z + f_i w,
    a_i w = delta_i w; the span of w is the submodule S_tgt."""
    if not any(sol.f):
        raise ValueError("zero solution does not define a nonsplit extension")
    src, tgt = sol.source, sol.target
    h_gens = {
        g: ExactMatrix.from_rows([[src.rho[g], ZERO], [ZERO, tgt.rho[g]]])
        for g in datum.group.gens
    }
    a_acts = [
        ExactMatrix.from_rows([[src.gamma[i], ZERO], [sol.f[i], tgt.gamma[i]]])
        for i in range(datum.rack.size)
    ]
    m = HModule(
        datum, 2, h_gens, a_acts, name=f"M_{{{src.rho_name},{tgt.rho_name}}}"
    )
    report = verify_module(m)
    if not report.ok:
        raise ValueError(f"solution does not define a module: {report.failures[:3]}")
    return m


def word_length(datum: QlDatum) -> WordLength:
    """Minimal factorization length over the rack image {g_i} by BFS,
    and the induced character psi(t) = chi_j(g_j)^ell(t)."""
    gens = sorted(set(datum.g_of))
    lengths = datum.group.word_lengths(gens)
    base = datum.chi_i_gi(0)
    psi = tuple(base ** l for l in lengths)
    return WordLength(tuple(lengths), psi)


def one_dim_census(datum: QlDatum):
    """(name, extensions) for each character of the abelianization."""
    return [
        (name, extend_character(datum, rho, name))
        for name, rho in gab_characters(datum)
    ]
