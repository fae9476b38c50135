"""Exact commutative-algebra toolkit for Rees algebras of cycle path ideals."""

from .classify import (
    ClassRecord,
    circulant_rank,
    classification_table,
    classify,
    cm_type_odd,
    conjecture_fiber_iff_divides,
    fiber_dimension,
    gorenstein_witness,
    hilbert_closed_form_n_minus_2,
    is_fiber_type,
    is_linear_type,
    render_table,
    verify_hilbert,
)
from .groebner import (
    Budget,
    BudgetExceeded,
    Ideal,
    buchberger,
    eliminate,
    gb_certificate,
    ideal_equal,
    ideal_membership,
    is_groebner_basis,
    normal_form,
)
from .monomial_ideals import (
    HilbertSeries,
    MonomialIdeal,
    colon_mono,
    hilbert_by_inclusion_exclusion,
    hilbert_numerator,
    initial_ideal,
    is_squarefree,
    sum_mono,
    x_condition,
)
from .orders import (
    OrderSpec,
    canonical_order,
    elimination_order,
    leading_term,
    monomial_cmp,
    product_order,
)
from .rees import (
    PathIdealSpec,
    PolyMatrix,
    family_half,
    family_n_minus_2,
    fiber_ideal,
    fiber_ideal_closed_form,
    jacobian_dual,
    path_ideal,
    pfaffian,
    pfaffian_fiber_sign,
    rees_ideal,
    sym_relations,
)
from .rings import Polynomial, RingSpec, cycle_ring, parse_polynomial, x_ring, y_ring

__all__ = [
    "Budget",
    "BudgetExceeded",
    "ClassRecord",
    "HilbertSeries",
    "Ideal",
    "MonomialIdeal",
    "OrderSpec",
    "PathIdealSpec",
    "PolyMatrix",
    "Polynomial",
    "RingSpec",
    "buchberger",
    "canonical_order",
    "circulant_rank",
    "classification_table",
    "classify",
    "cm_type_odd",
    "colon_mono",
    "conjecture_fiber_iff_divides",
    "cycle_ring",
    "eliminate",
    "elimination_order",
    "family_half",
    "family_n_minus_2",
    "gb_certificate",
    "fiber_dimension",
    "fiber_ideal",
    "fiber_ideal_closed_form",
    "gorenstein_witness",
    "hilbert_by_inclusion_exclusion",
    "hilbert_closed_form_n_minus_2",
    "hilbert_numerator",
    "ideal_equal",
    "ideal_membership",
    "initial_ideal",
    "is_fiber_type",
    "is_groebner_basis",
    "is_linear_type",
    "is_squarefree",
    "jacobian_dual",
    "leading_term",
    "monomial_cmp",
    "normal_form",
    "product_order",
    "parse_polynomial",
    "path_ideal",
    "pfaffian",
    "pfaffian_fiber_sign",
    "rees_ideal",
    "render_table",
    "sum_mono",
    "sym_relations",
    "verify_hilbert",
    "x_condition",
    "x_ring",
    "y_ring",
]
