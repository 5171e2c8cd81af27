import pytest

from qlhopf.catalog import (
    a1_datum,
    catalog_module,
    fusion_expected,
    indecomposables3,
    indecomposables4,
    m4_name,
    p1_family,
    parse_theta,
    projectives,
    simples,
    st_solutions,
    standard_rep,
    theta_label,
)
from qlhopf.hmodules import is_isomorphic, tensor, verify_module
from qlhopf.linalg import ExactMatrix
from qlhopf.scalars import GQ, I, ONE

I3 = GQ(0, "1/3")


def test_standard_rep_matrices():
    mats = standard_rep()
    assert mats["(12)"] == ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert mats["(23)"] == ExactMatrix.from_rows([[1, 0], [-1, -1]])
    assert mats["(13)"] == ExactMatrix.from_rows([[-1, -1], [0, 1]])
    # braid relation and the product identity for the third generator
    h12, h23, h13 = mats["(12)"], mats["(23)"], mats["(13)"]
    assert h12 * h23 * h12 == h23 * h12 * h23 == h13
    assert h12 * h12 == ExactMatrix.identity(2)


def test_simple_lists():
    assert [e.name for e in simples(0)] == ["S_eps", "S_sg", "S_st"]
    names1 = [e.name for e in simples(1)]
    assert names1 == [
        "S_eps", "S_sg", "S_st(i)", "S_st(-i)", "S_st(i/3)", "S_st(-i/3)",
    ]
    with pytest.raises(ValueError):
        simples(2)


def test_st_action_values():
    d = a1_datum()
    sti = catalog_module(d, "S_st(i)")
    a12 = sti.rho_a(0)
    # a12 v = i(v - w) and a12 w = i(v - w)
    assert a12.col(0) == [I, -I]
    assert a12.col(1) == [I, -I]
    st3 = catalog_module(d, "S_st(i/3)")
    a12 = st3.rho_a(0)
    assert a12.col(0) == [I3, I3]
    assert a12.col(1) == [-I3, -I3]


def test_graded_standard_simple_annihilated():
    st = simples(0)[2].module
    assert all(st.rho_a(i).is_zero() for i in range(3))


def test_indecomposable_list_sizes():
    assert len(indecomposables3(0)) == 4
    assert len(indecomposables3(1)) == 8
    assert len(indecomposables4()) == 8


def test_indecomposable3_action_examples():
    d = a1_datum()
    m = next(e.module for e in indecomposables3(0) if e.name == "M_{st,eps}")
    # a12 v = x, a12 x = 0 on the basis (x, v, w)
    assert m.rho_a(0).col(1) == [ONE, GQ(0), GQ(0)]
    assert m.rho_a(0).col(0) == [GQ(0)] * 3
    m = next(e.module for e in indecomposables3(1) if e.name == "M_{st,sg}[i]")
    # a12 v = i(v-w) + y on the basis (y, v, w)
    assert m.rho_a(0).col(1) == [ONE, I, -I]
    m = next(e.module for e in indecomposables3(1) if e.name == "M_{sg,st}[i/3]")
    # a12 y = v + w, a12 v = (i/3)(v+w)
    assert m.rho_a(0).col(0) == [GQ(0), ONE, ONE]
    assert m.rho_a(0).col(1) == [GQ(0), I3, I3]


def test_m4_name_round_trip():
    name = m4_name(GQ(0), GQ(0, 2), ONE, ONE, GQ(0), GQ(0), -I)
    assert name == "M(0,2i,1,1,0,0)[-i]"
    d = a1_datum()
    m = catalog_module(d, name)
    assert m.dim == 4 and verify_module(m).ok


def test_theta_labels():
    assert theta_label(I) == "i"
    assert theta_label(-I) == "-i"
    assert theta_label(I3) == "i/3"
    assert theta_label(-2 * I3) == "-2i/3"
    assert theta_label(GQ(0)) == "0"
    assert parse_theta("-2i/3") == -2 * I3
    assert parse_theta("1") == ONE


def test_projective_dims_and_twists(table_a1):
    pairs = projectives(1, table_a1)
    dims = {cover.name: cover.module.dim for cover, _ in pairs}
    assert dims == {
        "I_eps": 12, "I_sg": 12,
        "P_st(i)": 6, "P_st(-i/3)": 6, "P_st(i/3)": 6, "P_st(-i)": 6,
    }
    for cover, _ in pairs:
        assert verify_module(cover.module).ok
    mods = [cover.module for cover, _ in pairs if cover.name.startswith("P_st")]
    for a in range(len(mods)):
        for b in range(a + 1, len(mods)):
            assert is_isomorphic(mods[a], mods[b]) is False


def test_p_st_twist_relation(table_a1):
    d = a1_datum()
    pairs = dict((cover.name, cover.module) for cover, _ in projectives(1, table_a1))
    sg = catalog_module(d, "S_sg")
    assert is_isomorphic(pairs["P_st(-i/3)"], tensor(pairs["P_st(i)"], sg)) is True


def test_st_solutions_exact():
    sols = st_solutions(1)
    assert set(sols) == {(I, -I), (-I, I), (I3, I3), (-I3, -I3)}
    for alpha, beta in sols:
        assert GQ(-5) * alpha**2 - GQ(4) * alpha * beta == ONE
    with pytest.raises(ValueError):
        st_solutions(0)


def test_fusion_table_covers_everything():
    table = fusion_expected()
    names = ["S_eps", "S_sg", "S_st(i)", "S_st(-i)", "S_st(i/3)", "S_st(-i/3)"]
    assert set(table) == {(a, b) for a in names for b in names}
    d = a1_datum()
    for target in set(table.values()):
        assert catalog_module(d, target).dim in (1, 2, 4)


def test_fusion_spot_checks():
    table = fusion_expected()
    assert table[("S_st(i)", "S_st(i)")] == "M(0,2i,1,1,0,0)[-i]"
    assert table[("S_st(-i)", "S_st(-i)")] == "M(0,-2i,1,1,0,0)[i]"
    assert table[("S_st(i)", "S_sg")] == "S_st(-i/3)"
    assert table[("S_sg", "S_st(i)")] == "S_st(i/3)"


def test_p1_family_errors():
    with pytest.raises(ValueError):
        p1_family(GQ(0), GQ(0))


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        catalog_module(a1_datum(), "S_mystery")
