"""Defining relations of the lifting algebra H(Q).

H(Q) is generated by group letters H_t and rack letters a_l subject to
the group law, the braided commutation H_t a_l = chi_l(t) a_{t.l} H_t,
and one quadratic relation per class in R':

    sum_h eta_h(C) a_{i_{h+1}} a_{i_h}  =  lambda_C (1 - H_{g_i g_j}).

This module materializes those relations from a datum; the coalgebra
structure (grouplikes, skew-primitives, antipode) lives here too since
tensor products and duals of modules are built from it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qldata import QlDatum
from .scalars import GQ


@dataclass(frozen=True)
class QuadraticRelation:
    """sum of coeff * a_i a_j over terms equals lam * (1 - H_g)."""

    class_index: int
    terms: tuple[tuple[tuple[int, int], GQ], ...]  # ((i, j), coefficient)
    lam: GQ
    rhs_group: int  # group element index of g_{i_2} g_{i_1}


@dataclass(frozen=True)
class RelationSet:
    datum: QlDatum
    group_relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    swap_rules: dict  # (gen element index, l) -> (chi_l(gen), gen . l)
    quadratics: tuple[QuadraticRelation, ...]


def relation_set(datum: QlDatum) -> RelationSet:
    """All defining relations; quadratic terms in canonical cycle order."""
    group = datum.group
    braid: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    gens = group.gens
    for a in range(len(gens)):
        braid.append(((a, a), ()))
        for b in range(a + 1, len(gens)):
            if b == a + 1:
                braid.append(((a, b, a), (b, a, b)))
            else:
                braid.append(((a, b), (b, a)))
    swaps = {}
    for t in gens:
        for l in range(datum.rack.size):
            swaps[(t, l)] = (datum.chi_of(l, t), datum.act(t, l))
    quads = []
    for c in datum.rprime_classes():
        terms = tuple((pair, datum.classes[c.index].eta[h]) for h, pair in enumerate(c.pairs))
        quads.append(
            QuadraticRelation(
                class_index=c.index,
                terms=terms,
                lam=datum.lam(c.index),
                rhs_group=datum.rhs_group(c),
            )
        )
    return RelationSet(datum, tuple(braid), swaps, tuple(quads))


@dataclass(frozen=True)
class CoalgebraData:
    """Coproduct/antipode shapes of the generators.

    H_t is grouplike: Delta(H_t) = H_t (x) H_t, S(H_t) = H_{t^-1}.
    a_i is skew-primitive: Delta(a_i) = g_i (x) a_i + a_i (x) 1 and
    S(a_i) = -H_{g_i}^{-1} a_i.
    """

    datum: QlDatum
    skew_group_of: tuple[int, ...]  # rack index -> group element index g_i

    def antipode_a(self, i: int) -> tuple[int, int]:
        """S(a_i) described as (-1) * H at given inverse index * a_i."""
        return (self.datum.group.inv(self.skew_group_of[i]), i)


def coproduct_antipode_data(datum: QlDatum) -> CoalgebraData:
    return CoalgebraData(datum, tuple(datum.g_of))
