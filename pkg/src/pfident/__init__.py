"""Exact and numerical verification of determinant and Pfaffian identities.

The toolkit evaluates both sides of each identity at random pole-free
sample points: exactly over arbitrary-precision rationals, or in double
precision for the trigonometric and elliptic kernel variants, where every
kernel is certified against its defining properties (oddness and the
three-term Riemann relation) rather than trusted from formula tables.
"""

from .brackets import (
    BracketFunction,
    EllipticParams,
    GaugeParams,
    bracket_eval,
    elliptic_bracket,
    rational_bracket,
    riemann_residual,
    sigma,
    theta1,
    trigonometric_bracket,
)
from .evaluation import IdentityEvaluation, evaluate, residual_between
from .fields import DEFAULT_TOLERANCE, Tolerance, is_exact, near_equal
from .harness import TrialReport, emit_report, run_suite, run_trial, trial_rng
from .identities import (
    REGISTRY,
    IdentitySpec,
    PoleError,
    check_cauchy,
    check_det1,
    check_det2,
    check_frobenius,
    check_frobenius_limit_degeneration,
    check_general_det,
    check_general_pf,
    check_key_identity,
    check_main,
    check_okada_det,
    check_okada_pf,
    check_rational_schur_det,
    check_rational_schur_pf,
    check_schur_pfaffian,
    check_specialization_consistency,
    check_trig_det,
    check_trig_pf,
    specialization_split,
    validate_params,
)
from .linalg import (
    Matrix,
    SkewMatrix,
    check_desnanot_jacobi,
    determinant,
    pfaffian,
    pfaffian_minor,
    pfaffian_oracle,
)
from .sampling import SamplerConfig, SamplerStarvationError, bracket_for, sample_point
from .symfunc import (
    CoincidentPointsError,
    Partition,
    check_bidet_relation,
    complete_homogeneous,
    d_poly,
    delta_pq,
    difference_product,
    epsilon_pq,
    schur,
    schur_jacobi_trudi,
    schur_oracle,
    schur_tableau,
    staircase,
    vandermonde_pq,
    w_matrix,
)

__version__ = "0.1.0"
