"""Fast discrete linear canonical transform via chirp multiplication, chirp
convolution and FFTs."""

from .analysis import (
    ExperimentReport,
    LengthMismatch,
    Record,
    UnknownSignal,
    ZeroReference,
    accuracy_experiment,
    additivity_experiment,
    gaussian_lct_closed_form,
    make_test_signal,
    nmse,
    random_params,
    reversibility_experiment,
    run_experiment,
)
from .core import (
    ChirpRate,
    DeterminantError,
    InvalidParams,
    LctError,
    LctParams,
    SamplingPlan,
    Signal,
    ZeroBError,
    centered_indices,
    compose,
    inverse,
    make_params,
    map_continuous_to_discrete,
)
from .estimators import (
    FractionalFourierTransform,
    FresnelTransform,
    LinearCanonicalTransform,
    ScalingTransform,
)
from .kernels import centered_dft, centered_idft, chirp_mul, direct_dlct
from .sampling import (
    DegenerateParallelogram,
    ParallelogramSpec,
    TimeFreqBox,
    box_from_parallelogram,
    min_rate_basic,
    min_rate_recoverable,
    min_samples,
    parallelogram_reduce,
    plan,
    plan_refined,
)
from .transform import IllConditionedWarning, dfresnel, dfrft, dlct, dscale, idlct

__version__ = "0.1.0"
