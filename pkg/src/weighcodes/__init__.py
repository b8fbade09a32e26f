"""Weighing matrices over odd prime-power fields and the optimal constant-weight
ternary codes they generate, with Johnson-bound optimality certificates."""

from .bounds import (
    BoundResult,
    BWParams,
    bw_derived_bound,
    bw_distances,
    bw_params,
    bw_range,
    family_upper,
    johnson_restricted,
    johnson_step,
    t1_upper,
)
from .constructions import (
    Certificate,
    build_family_code,
    build_family_matrix,
    build_t1_code,
    bw_derived_code,
    certify,
    certify_t1,
)
from .finite_field import FieldElement, FiniteField, PrimePower, chi, factor_prime_power, field_new
from .orthogonal_array import OrthogonalArray, oa_build, oa_verify, projective_points, substitute
from .ternary_code import CodeStats, TernaryCode, analyze, double, from_matrix, hamming, to_matrix
from .ternary_matrix import (
    NormalFormParts,
    TernaryMatrix,
    conference,
    const_column,
    hstack,
    is_balanced,
    is_weighing,
    jacobsthal,
    kron_ones,
    negate,
    normal_form,
    vstack,
)

__version__ = "0.1.0"
