"""Exact computation of Gröbner éscaliers and quotient bases of zero-dimensional ideals."""

from .cartesian import (
    CartesianDescription,
    SliceFamily,
    build_cartesian,
    failing_axis,
    is_cartesian,
    slice_lower_sets,
    slices,
    xi_family,
)
from .errors import QBasisError
from .functionals import (
    Functional,
    FunctionalSet,
    PointSet,
    evaluate,
    evaluation_matrix,
    from_points,
)
from .ideals import OrderIdeal, corner, is_lower_set
from .moeller import EscalierResult, escalier, is_independent_mod_ideal, normal_form
from .orders import (
    EQUAL,
    GREATER,
    LESS,
    MonomialOrder,
    compare,
    elim,
    grevlex,
    grlex,
    lex,
    lex_i,
    named_order,
    random_order,
)
from .polynomial import Polynomial, leading_monomial
from .uniqueness import (
    UniquenessVerdict,
    corner_dependence_unique,
    enumerate_quotient_bases,
    unique_quotient_basis,
    universal_groebner_basis,
)

__version__ = "0.1.0"
