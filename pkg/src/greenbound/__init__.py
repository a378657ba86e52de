"""Green's function of the bounded-solutions problem and its norm bounds."""

from .bounds import (
    BoundParams,
    BoundTerm,
    binom_conv,
    bound_tail_integral,
    evaluate_terms,
    expm_bound,
    green_bound,
    green_bound_terms,
    lemma_derivative_bound,
    params_for,
)
from .dichotomy import DichotomyData, ordered_nodes, split_spectrum
from .divided import (
    dd_contour_oracle,
    dd_distinct_formula,
    divided_difference_table,
    gelfond_bound,
)
from .errors import (
    ContourError,
    DichotomyViolation,
    DistinctnessViolation,
    EigenFailure,
    EvaluationError,
    GenerationError,
    GreenBoundError,
    InvalidInput,
    RangeError,
    WindowError,
)
from .green import (
    BoundedSolver,
    ForcingFn,
    GreenKernel,
    bounded_solution,
    constant_forcing,
    green_limits,
    green_newton,
    green_projector,
    pulse_forcing,
    residual,
    riesz_projector_contour,
    sine_forcing,
    spectral_projector,
)
from .jets import (
    AnalyticFn,
    Jet,
    constant,
    exp_fn,
    exp_minus,
    exp_plus,
    left_indicator,
    polynomial,
    reciprocal_product,
    tilde_exp,
    tilde_exp_minus,
    tilde_exp_plus,
)
from .linalg import eigenvalues, expm, load_matrix, op_norm
from .newton import (
    NewtonPolynomial,
    build_newton,
    eval_matrix,
    eval_scalar,
    hermite_check,
    matrix_function,
    spectral_nodes,
)

__version__ = "0.1.0"
