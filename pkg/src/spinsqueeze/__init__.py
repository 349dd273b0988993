"""Spin coherent states, their nonlinear evolutions, and spin squeezing."""

from .analytic import (
    MomentSet,
    factorial_moment,
    generating_function,
    nlscs_jminus_k,
    nlscs_xi_z,
    scs_jminus_k,
    scs_number_moments,
    scs_spin_means,
    scs_variances_xy,
)
from .coherent_states import (
    CoherentParams,
    EvolvedParams,
    effective_nonlinearity,
    ladder_residual,
    nonlinear_scs,
    parity_identity_residual,
    scs,
)
from .errors import (
    ArgumentError,
    ConfigError,
    EvaluationError,
    ParseError,
    SpinSqueezeError,
    UndefinedSqueezingError,
)
from .fnl import NonlinearFunction, evaluate, parse
from .spin_algebra import (
    X_AXIS,
    Y_AXIS,
    Z_AXIS,
    Direction,
    Operator,
    SpinSpace,
    StateVector,
    cartesian_components,
    direction_component,
    expectation,
    ladder_lowering,
    make_space,
    number_operator,
    number_state,
    parity_operator,
    variance,
)
from .squeezing import SqueezingReport, mean_spin, orthogonal_triad, squeezing_parameter, squeezing_xyz
from .sweep import SweepConfig, SweepRow, run_sweep
from .verification import run_verify

__version__ = "0.1.0"
