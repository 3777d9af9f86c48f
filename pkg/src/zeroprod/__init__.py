"""Annihilator lattices and maximal zero-product subspaces of finite-dimensional
associative algebras over prime fields."""

from .algebra import (
    Algebra,
    IdealSide,
    core,
    enumerate_idempotents,
    from_json,
    has_nonzero_nilpotent,
    ideal_closure,
    is_prime,
    is_semiprime,
    is_simple,
    mat_algebra,
    multiply,
    set_product,
    to_json,
    upper_triangular,
    validate,
)
from .annlattice import (
    OrthogonalPair,
    check_vnr_identity,
    close_left,
    close_right,
    is_closed,
    is_maximal_pair,
    is_orthogonal_pair,
    is_regular_inner_ideal,
    lann,
    pair_from_inner,
    rann,
    saturate_pair,
)
from .classify import (
    ClassificationReport,
    annihilator_right_ideals,
    classify_max_zero_product,
    idempotent_classification,
    oracle_max_zero_product,
    oracle_randomized,
    verify_bijection,
)
from .exceptions import (
    AlgebraValidationError,
    BudgetExceeded,
    DimensionMismatch,
    HypothesisFailed,
    SideError,
)
from .geometry import DualPair, dual_pair_classification, dual_product, perp
from .lie import bracket, cross_check_lie, is_abelian_inner_ideal, is_inner_ideal, set_bracket
from .linalg import Subspace, enumerate_subspaces, kernel, rref

__version__ = "0.1.0"
