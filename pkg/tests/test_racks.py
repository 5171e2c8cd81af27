from collections import Counter

import pytest

from qlhopf.racks import (
    alpha_beta,
    constant_cocycle,
    enumerate_classes,
    ms_cocycle,
    transposition_rack,
)
from qlhopf.scalars import GQ, MINUS_ONE, ONE


def test_transposition_rack_sizes():
    assert transposition_rack(3).size == 3
    assert transposition_rack(4).size == 6
    with pytest.raises(ValueError):
        transposition_rack(2)


def test_conjugation_example():
    r = transposition_rack(3)
    i12 = r.labels.index("(12)")
    i23 = r.labels.index("(23)")
    i13 = r.labels.index("(13)")
    assert r.op(i12, i23) == i13


def test_rack_axioms():
    for n in (3, 4, 5):
        assert transposition_rack(n).check() == []


def test_cocycle_axioms():
    for n in (3, 4):
        r = transposition_rack(n)
        assert constant_cocycle(r, MINUS_ONE).check(r) == []
        assert ms_cocycle(n).check(r) == []


def test_ms_cocycle_values():
    q = ms_cocycle(3)
    # chi((12),(12)) = -1: the transposition inverts its own pair
    assert q.q(0, 0) == MINUS_ONE
    # (12) keeps 1 < 3 when applied to the pair (13)... entries 2,3 stay ordered
    assert q.q(0, 2) == ONE  # sigma=(12) on tau=(23): images 1,3 stay increasing


def test_classes_o2_3():
    r = transposition_rack(3)
    classes = enumerate_classes(r, constant_cocycle(r, MINUS_ONE))
    sizes = Counter(c.size for c in classes)
    assert sizes == {1: 3, 3: 2}
    assert all(c.in_rprime for c in classes)
    for c in classes:
        if c.size == 3:
            assert list(c.eta[:3]) == [ONE, ONE, ONE]


def test_classes_o2_4():
    r = transposition_rack(4)
    for cocycle in (constant_cocycle(r, MINUS_ONE), ms_cocycle(4)):
        classes = enumerate_classes(r, cocycle)
        sizes = Counter(c.size for c in classes)
        assert sizes == {1: 6, 2: 3, 3: 8}
        assert all(c.in_rprime for c in classes)


def test_classes_partition():
    for n in (3, 4):
        r = transposition_rack(n)
        classes = enumerate_classes(r, constant_cocycle(r, MINUS_ONE))
        seen = [p for c in classes for p in c.pairs]
        assert len(seen) == r.size**2
        assert len(set(seen)) == r.size**2


def test_zeta_eta_identity():
    for n in (3, 4):
        r = transposition_rack(n)
        for cocycle in (constant_cocycle(r, MINUS_ONE), ms_cocycle(n)):
            for c in enumerate_classes(r, cocycle):
                for h in range(1, c.size + 1):
                    assert c.zeta[h] * c.zeta[h - 1] == c.eta[h - 1]
                assert c.zeta[0] == ONE and c.zeta[1] == ONE


def test_class_cycle_starts_lex_smallest():
    r = transposition_rack(4)
    for c in enumerate_classes(r, constant_cocycle(r, MINUS_ONE)):
        assert c.rep == min(c.pairs)


def test_alpha_beta_examples():
    r = transposition_rack(3)
    classes = enumerate_classes(r, constant_cocycle(r, MINUS_ONE))
    three = next(c for c in classes if c.size == 3)
    one = next(c for c in classes if c.size == 1)
    j = three.pairs[0][0]
    assert alpha_beta(three, j, MINUS_ONE) == (ONE, GQ(0))
    assert alpha_beta(one, one.pairs[0][0], MINUS_ONE) == (GQ(0), ONE)
    r4 = transposition_rack(4)
    two = next(
        c
        for c in enumerate_classes(r4, constant_cocycle(r4, MINUS_ONE))
        if c.size == 2
    )
    a, b = alpha_beta(two, two.pairs[0][0], MINUS_ONE)
    assert a == b  # even classes always have alpha = beta
    a, b = alpha_beta(two, two.pairs[0][0], GQ(0, 1))
    assert a == b


def test_alpha_beta_requires_membership():
    r = transposition_rack(4)
    classes = enumerate_classes(r, constant_cocycle(r, MINUS_ONE))
    singleton = next(c for c in classes if c.size == 1)
    outside = next(i for i in range(r.size) if not any(i in p for p in singleton.pairs))
    with pytest.raises(ValueError):
        alpha_beta(singleton, outside, MINUS_ONE)
