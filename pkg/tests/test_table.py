import copy

import pytest

from qlhopf.relations import relation_set
from qlhopf.scalars import MINUS_ONE, ONE
from qlhopf.table import (
    ClosureError,
    Q3_MONOMIAL_BASIS,
    RewritingError,
    Rewriter,
    algebra_radical,
    audit_associativity,
    build_table,
    complete_rules,
    group_algebra_table,
    oriented_rules,
    radical_nilpotency_index,
)


def test_dimensions(table_a0, table_a1):
    assert table_a0.dim == 72
    assert table_a1.dim == 72


def _vec_of(table, word, t_label="e"):
    d = table.datum
    t = next(t for t in range(d.group.order) if d.group.label(t) == t_label)
    return {table.index_of(tuple(word), t): ONE}


def test_relation_set_contents(q3_1):
    rels = relation_set(q3_1)
    assert len(rels.quadratics) == 5  # three squares and two 3-classes
    squares = [r for r in rels.quadratics if len(r.terms) == 1]
    assert len(squares) == 3 and all(not r.lam for r in squares)
    cubics = [r for r in rels.quadratics if len(r.terms) == 3]
    assert all(r.lam == ONE for r in cubics)
    # the braided swap on the generators: H_t a_l = -a_{t.l} H_t
    for (t, l), (chi, tl) in rels.swap_rules.items():
        assert chi == MINUS_ONE or q3_1.group.sign(t) == 1


def test_square_vanishes(table_a1):
    a12 = _vec_of(table_a1, (0,))
    assert table_a1.mul_vec(a12, a12) == {}


def test_oriented_product_example(table_a1):
    # a_(23) a_(13) = lam - lam H_(123) - a_(12) a_(23) - a_(13) a_(12)
    a23 = _vec_of(table_a1, (2,))
    a13 = _vec_of(table_a1, (1,))
    got = table_a1.mul_vec(a23, a13)
    expected = {}
    expected.update(_vec_of(table_a1, ()))
    for k, v in _vec_of(table_a1, (), "(123)").items():
        expected[k] = -v
    for k, v in _vec_of(table_a1, (0, 2)).items():
        expected[k] = -v
    for k, v in _vec_of(table_a1, (1, 0)).items():
        expected[k] = -v
    assert got == expected


def test_swap_example(table_a1):
    # H_(12) a_(13) = -a_(23) H_(12)
    h12 = _vec_of(table_a1, (), "(12)")
    a13 = _vec_of(table_a1, (1,))
    lhs = table_a1.mul_vec(h12, a13)
    a23 = _vec_of(table_a1, (2,))
    rhs = {k: -v for k, v in table_a1.mul_vec(a23, h12).items()}
    assert lhs == rhs


def test_zero_lifting_products_have_no_group_terms(table_a0):
    a23 = _vec_of(table_a0, (2,))
    a13 = _vec_of(table_a0, (1,))
    got = table_a0.mul_vec(a23, a13)
    assert all(table_a0.basis_term(k)[0] for k in got)  # no constant terms


def test_completion_derives_the_cubic_rule(q3_1):
    basis = set(Q3_MONOMIAL_BASIS)
    rules = complete_rules(q3_1, oriented_rules(q3_1, basis), basis)
    assert (1, 0, 1) in rules
    rhs = rules[(1, 0, 1)]
    e = q3_1.group.identity
    assert rhs[((0, 1, 0), e)] == ONE
    assert rhs[((1,), e)] == ONE
    assert rhs[((0,), e)] == MINUS_ONE


def test_radical_dimensions(table_a0, table_a1):
    assert algebra_radical(table_a0)[:2] == (66, 6)
    assert algebra_radical(table_a1)[:2] == (54, 18)


def test_radical_nilpotent(table_a0, table_a1):
    for tab in (table_a0, table_a1):
        _, _, j = algebra_radical(tab)
        k = radical_nilpotency_index(tab, j, cap=12)
        assert k <= tab.dim


def test_group_algebra_semisimple(q3_1):
    tab = group_algebra_table(q3_1)
    dim_j, dim_ss, _ = algebra_radical(tab)
    assert (dim_j, dim_ss) == (0, 6)


def test_unit_behaviour(table_a1):
    u = {table_a1.unit_index: ONE}
    x = _vec_of(table_a1, (0, 1), "(123)")
    assert table_a1.mul_vec(u, x) == x
    assert table_a1.mul_vec(x, u) == x


def test_associativity_audit_catches_corruption(table_a0):
    broken = copy.deepcopy(table_a0)
    i = broken.index_of((0,), broken.datum.group.identity)
    j = broken.index_of((1,), broken.datum.group.identity)
    entries = list(broken.mult[i][j])
    entries[0] = (entries[0][0], entries[0][1] + ONE)
    broken.mult[i][j] = tuple(entries)
    with pytest.raises(RewritingError):
        audit_associativity(broken)


def test_closure_error_when_basis_too_small(q3_0):
    truncated = Q3_MONOMIAL_BASIS[:-1]  # drop the degree-4 word
    with pytest.raises(ClosureError):
        build_table(q3_0, truncated)


def test_step_limit_guards_nontermination(q3_0):
    silly = {(0, 0): {((0, 0), q3_0.group.identity): ONE}}
    r = Rewriter(q3_0, silly, step_limit=50)
    with pytest.raises(RewritingError):
        r.reduce_word((0, 0))


def test_table_json_deterministic(table_a0):
    import json

    a = json.dumps(table_a0.to_json(), sort_keys=True)
    b = json.dumps(table_a0.to_json(), sort_keys=True)
    assert a == b
    doc = table_a0.to_json()
    assert doc["dim"] == 72 and len(doc["basis"]) == 72
