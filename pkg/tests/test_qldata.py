import json

import pytest

from qlhopf.qldata import (
    build_builtin,
    cached_builtin,
    datum_from_json,
    datum_to_json,
    validate,
)
from qlhopf.scalars import GQ, MINUS_ONE, ZERO


def test_q3_minus_shape(q3_1):
    assert q3_1.rack.size == 3
    assert q3_1.group.order == 6
    values = sorted(
        (q3_1.classes[ci].size, str(v)) for ci, v in q3_1.lambdas.items()
    )
    # lambda sits on the two 3-classes; singletons carry 0 implicitly
    assert values == [(3, "1"), (3, "1")]
    for c in q3_1.classes:
        if c.size == 1:
            assert q3_1.lam(c.index) == ZERO


def test_q3_zero_all_lambda_zero(q3_0):
    assert all(not v for v in q3_0.lambdas.values())


def test_chi_value_example():
    d = cached_builtin("Qn_chi", 4, lam=1)
    i12 = d.rack.labels.index("(12)")
    g12 = d.g_of[i12]
    assert d.chi_of(i12, g12) == MINUS_ONE


def test_validate_builtins():
    cases = [
        build_builtin("Q3_minus", lam=1),
        build_builtin("Q3_minus", lam=0),
        build_builtin("Qn_minus", 4, Lam=1, Gam=1),
        build_builtin("Qn_chi", 4, lam=1),
        build_builtin("Qn_minus", 5, Lam=GQ("1/2"), Gam=GQ(0, 1)),
        build_builtin("Qn_chi", 5, lam=1),
    ]
    for d in cases:
        report = validate(d)
        assert report.ok, (d.name, report.failures[:3])


def test_invalid_n():
    with pytest.raises(ValueError):
        build_builtin("Qn_minus", 3, Lam=1, Gam=1)
    with pytest.raises(ValueError):
        build_builtin("Q3_minus", 4, lam=1)
    with pytest.raises(ValueError):
        build_builtin("nope")


def test_lambda_on_singleton_is_invalid(q3_1):
    doc = datum_to_json(q3_1)
    doc["lambda"]["(12),(12)"] = "1"
    bad = datum_from_json(doc)
    report = validate(bad)
    assert not report.ok
    assert any("g_i g_j = e" in f for f in report.failures)


def test_constant_chi_is_invalid():
    d = cached_builtin("Qn_chi", 4, lam=1)
    doc = datum_to_json(d)
    doc["chi"] = [["1"] * d.group.order for _ in range(d.rack.size)]
    doc["lambda"] = {}
    bad = datum_from_json(doc)
    report = validate(bad)
    assert not report.ok
    assert any("chi_i(g_j)" in f for f in report.failures)


def test_json_round_trip(q3_1):
    doc = json.loads(json.dumps(datum_to_json(q3_1)))
    back = datum_from_json(doc)
    assert validate(back).ok
    assert back.lambdas == q3_1.lambdas
    assert back.g_of == q3_1.g_of
    assert back.chi == q3_1.chi


def test_chi_family_lambda_transport_consistency():
    d = cached_builtin("Qn_chi", 4, lam=1)
    three = [c for c in d.classes if c.size == 3]
    vals = {str(d.lam(c.index)) for c in three}
    # the equivariance forces alternating signs across the 3-classes
    assert vals == {"1", "-1"}
    assert validate(d).ok


def test_minus_family_lambda_constant():
    d = cached_builtin("Qn_minus", 4, Lam=GQ(2), Gam=GQ(3))
    for c in d.classes:
        if c.size == 2:
            assert d.lam(c.index) == GQ(2)
        if c.size == 3:
            assert d.lam(c.index) == GQ(3)
