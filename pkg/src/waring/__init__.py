"""Exact Waring ranks and power-sum decompositions for sums of pairwise
coprime monomials."""

from .cyclotomic import (
    CyclotomicNumber,
    DivisibilityError,
    cyclotomic_embed,
    cyclotomic_polynomial,
    euler_phi,
)
from .linalg import (
    InconsistentSystemError,
    LinearSystem,
    UnderdeterminedSystemError,
    matrix_rank,
    solve_exact,
)
from .polynomials import Polynomial, apply_differential, poly_pow_linear
from .forms import (
    CoprimeForm,
    HomogeneousForm,
    MixedDegreeError,
    Monomial,
    MonomialIdeal,
    NonCoprimeError,
    ParseError,
    ci_point_ideal,
    drop_unused_variables,
    parse_form,
    parse_homogeneous,
    perp_generators,
    render_form,
)
from .rank import (
    GenericRank,
    asymptotic_ratio_report,
    generic_rank,
    max_monomial_rank_3vars,
    quadratic_form_rank,
    rank_coprime_sum,
    rank_monomial,
    survey_max_monomial_rank,
)
from .apolarity import (
    CatalecticantMatrix,
    catalecticant,
    catalecticant_lower_bound,
    claim_ideals,
    hf_monomial_quotient,
    hf_sum_complete_intersection,
    hf_table,
    annihilator_membership,
    intersect_monomial_ideals,
    verify_claim_identity,
)
from .decompose import (
    PowerSumDecomposition,
    decompose_form,
    decomposition_points,
    least_variable_check,
    solve_gammas,
    verify_decomposition,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
