import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlhopf.linalg import (
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
from qlhopf.scalars import GQ, I, ONE, ZERO


def M(rows):
    return ExactMatrix.from_rows(rows)


def test_kernel_examples():
    ker = kernel_basis(M([[1, 1], [1, 1]]))
    assert len(ker) == 1
    v = ker[0]
    assert v[0] + v[1] == ZERO and any(v)
    assert kernel_basis(ExactMatrix.identity(3)) == []
    ker = kernel_basis(M([[0]]))
    assert len(ker) == 1 and ker[0][0] == ONE


def test_rank_transpose_invariance():
    m = M([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == rank(m.transpose()) == 2


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def small_matrices(draw):
    r = draw(st.integers(min_value=1, max_value=4))
    c = draw(st.integers(min_value=1, max_value=4))
    entries = draw(st.lists(small_ints, min_size=r * c, max_size=r * c))
    return ExactMatrix(r, c, [GQ(e) for e in entries])


@given(small_matrices())
@settings(max_examples=60)
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols


@given(small_matrices())
@settings(max_examples=60)
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m):
        assert not any(m.matvec(v))


def test_closure_of_identity():
    assert len(subalgebra_closure([ExactMatrix.identity(3)])) == 1


def test_closure_dense_for_simple_module():
    from qlhopf.catalog import a1_datum, st_module

    m = st_module(a1_datum(), I)
    basis = subalgebra_closure(m.generator_matrices())
    assert len(basis) == 4


def test_closure_of_triangular_pair_is_three_dimensional():
    from qlhopf.catalog import a1_datum
    from qlhopf.onedim import build_M, ext_space_1dim, one_dim_census

    d = a1_datum()
    census = dict(one_dim_census(d))
    _, sols = ext_space_1dim(d, census["eps"][0], census["sg"][0])
    m = build_M(d, sols[0])
    basis = subalgebra_closure(m.generator_matrices())
    assert len(basis) == 3


def test_closure_is_product_closed():
    gens = [M([[0, 1], [0, 0]]), M([[1, 0], [0, -1]])]
    basis = subalgebra_closure(gens)
    span = Subspace(4)
    for b in basis:
        span.add(b.entries)
    for x in basis:
        for y in basis:
            assert span.contains((x * y).entries)


def full_2x2_basis():
    return [
        M([[1, 0], [0, 0]]),
        M([[0, 1], [0, 0]]),
        M([[0, 0], [1, 0]]),
        M([[0, 0], [0, 1]]),
    ]


def upper_2x2_basis():
    return [M([[1, 0], [0, 0]]), M([[0, 0], [0, 1]]), M([[0, 1], [0, 0]])]


def test_trace_radical_semisimple():
    assert trace_form_radical(full_2x2_basis()) == []


def test_trace_radical_triangular():
    rad = trace_form_radical(upper_2x2_basis())
    assert len(rad) == 1
    x = rad[0]
    assert x[1, 0] == ZERO and x[0, 0] == ZERO and x[1, 1] == ZERO
    # every radical element is nilpotent
    assert (x * x).is_zero()


def test_trace_radical_rejects_non_closed():
    with pytest.raises(ValueError):
        trace_form_radical([M([[0, 1], [0, 0]]), M([[0, 0], [1, 0]])])


def test_lift_idempotent_fixed_point():
    e = M([[1, 0], [0, 0]])
    assert lift_idempotent(e, []) == e
    eye = ExactMatrix.identity(3)
    assert lift_idempotent(eye, []) == eye


def test_lift_idempotent_from_noise():
    rad = [M([[0, 1], [0, 0]])]
    e0 = M([[1, 5], [0, 0]])
    e = lift_idempotent(e0, rad)
    assert e * e == e
    assert Subspace(4).reduce((e - M([[1, 0], [0, 0]])).entries)  # nonzero is fine
    span = Subspace(4)
    span.add(rad[0].entries)
    assert span.contains((e - e0).entries)


def test_lift_idempotent_rejects_bad_input():
    rad = [M([[0, 1], [0, 0]])]
    with pytest.raises(ValueError):
        lift_idempotent(M([[2, 0], [0, 0]]), rad)


def test_minimal_polynomial_diagonal():
    m = M([[1, 0], [0, 2]])
    p = minimal_polynomial(m)
    # (x-1)(x-2) = 2 - 3x + x^2
    assert p == [GQ(2), GQ(-3), ONE]


def test_invert_and_solve():
    m = M([[1, 1], [0, 1]])
    inv = invert(m)
    assert inv is not None and m * inv == ExactMatrix.identity(2)
    assert invert(M([[1, 1], [1, 1]])) is None
