"""Exact construction and representation theory of the pointed Hopf
algebras attached to quadratic lifting data over symmetric groups.

The package computes, in exact Gaussian-rational arithmetic: the
72-dimensional liftings over S_3 as structure-constant tables, their
simple and indecomposable modules, fusion rules, Ext quivers with
Dynkin/affine classification of the separation diagrams, projective
covers, and the one-dimensional module theory of the S_n families.
"""

from .scalars import GQ, GaussianRational, format_gq, gq, parse_gq
from .linalg import (
    ExactMatrix,
    kernel_basis,
    lift_idempotent,
    subalgebra_closure,
    trace_form_radical,
)
from .racks import (
    Cocycle2,
    Rack,
    alpha_beta,
    constant_cocycle,
    enumerate_classes,
    ms_cocycle,
    transposition_rack,
)
from .qldata import (
    QlDatum,
    build_builtin,
    cached_builtin,
    datum_from_json,
    datum_to_json,
    validate,
)
from .relations import coproduct_antipode_data, relation_set
from .table import (
    AlgebraTable,
    Q3_MONOMIAL_BASIS,
    algebra_radical,
    build_table,
)
from .hmodules import (
    HModule,
    certify_projective_cover,
    decompose,
    dual,
    hom_space,
    induce,
    is_indecomposable,
    is_isomorphic,
    is_simple,
    restrict_isotypic,
    tensor,
    verify_module,
)
from .onedim import (
    build_M,
    build_S,
    ext_space_1dim,
    extend_character,
    one_dim_census,
    word_length,
)
from .extquiver import (
    classify_graph,
    ext1_dim,
    gabriel_quiver,
    rep_type_verdict,
    separation_diagram,
)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
