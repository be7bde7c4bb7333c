"""Exact Groebner bases, syzygies, free resolutions, and random space curves.

The engine works over prime fields F_p and the rationals with exact
arithmetic throughout.  Groebner bases are verified and completed through
the colon-ideal form of Buchberger's criterion, syzygies come with the
induced order that makes iterated resolution terminate, and the curve
pipeline builds random space curves of prescribed degree and genus from
finite-length modules over F_p.
"""

from .fields import GF, QQ, PrimeField, RationalField, field_from_spec
from .rings import (
    FreeModule,
    ModuleElement,
    MonomialOrder,
    PolyRing,
    Polynomial,
    SchreyerOrder,
    TermOverPosition,
    compare,
    leading_term,
    schreyer_order,
)
from .division import DivisionResult, divide, normal_form
from .groebner import (
    GroebnerBasis,
    MonomialIdeal,
    buchberger_complete,
    colon_generators,
    groebner_basis,
    ideal_quotient,
    is_groebner,
    minimal_groebner,
    saturate,
    standard_monomials,
)
from .resolution import (
    BettiTable,
    FreeResolution,
    GradedMatrix,
    betti_table,
    free_resolution,
    minimalize,
    schreyer_syzygies,
    sort_for_termination,
)
from .hilbert import (
    degree_genus,
    hilbert_function,
    hilbert_numerator_monomial,
    hilbert_polynomial,
    krull_dimension,
    numerator_from_resolution,
)
from .curves import (
    ConstructionRecipe,
    CurveReport,
    apolar_ideal,
    brill_noether_rho,
    build_hr_module,
    builtin_recipe,
    construct_curve,
    curve_from_module,
    gorenstein_experiment,
    graded_piece_kernel,
    maximal_rank_check,
    random_graded_matrix,
    smoothness_check,
)

__version__ = "0.1.0"
