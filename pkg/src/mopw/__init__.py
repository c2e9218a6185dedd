"""Exact Wronskian and Turanian determinants of multiple orthogonal polynomials."""

from .analyze import (
    DOMAIN_POSITIVE,
    DOMAIN_REAL,
    PositivityCertificate,
    Refutation,
    RootSet,
    certify_positive,
    complex_roots,
    interlacing_check,
    real_zero_profile,
    type1_wronskian_grid_sign,
)
from .construct import (
    LinearForm,
    SingularSystemError,
    at_system_probe,
    construct_type1,
    construct_type2,
    hermite_closed_form,
    laguerre1_closed_form,
    laguerre2_closed_form,
    lowered_family,
    raising_apply,
    type2,
)
from .indices import MultiIndex, PathSpec, enumerate_indices, enumerate_paths, validate_path
from .poly import Poly, poly_derivative, poly_eval, poly_eval_complex
from .polymatrix import PolyMatrix, polymat_det
from .rationals import rat, rat_from_str, rat_str
from .sturm import RationalInterval, isolate_real_roots, refine_interval, sturm_count
from .weights import InvalidFamilyError, MomentTable, WeightFamily, normalized_moments
from .wronskians import (
    TuranVariant,
    WronskianRequest,
    confluent_check,
    hankel_wronskian_identity_check,
    moment_acp,
    path_independence_check,
    sylvester_check,
    turan_expression,
    turanian,
    wronskian,
    wronskian_of_polys,
)

__version__ = "0.1.0"
