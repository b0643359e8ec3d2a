"""Nearly-Linear lower/upper probabilities on finite spaces.

Exact rational arithmetic throughout. The main entry points are
:class:`NLModel`, :func:`natural_extension` and :func:`check_dilation`.
"""

from .conditioning import (
    ConditionalAssessment,
    condition_vbm,
    natural_extension,
    regular_differs,
    regular_extension,
    submodel_stability,
    vbm_pmm_witness,
)
from .dilation import (
    ConstrictionReport,
    DilationReport,
    ExtentReport,
    characterize_dilation,
    check_constriction,
    check_dilation,
    coarsening_hypotheses,
    dependence_dilation,
    elle,
    elle_sign_test,
    epsilon_dilation,
    extent,
    extreme_dilation,
    find_dilating_coarser,
    imprecision_increase_extent,
    imprecision_increase_guarantee,
    imprecision_variation,
    non_correlation_dilation,
)
from .errors import (
    AssumptionError,
    CapacityError,
    InternalInconsistencyError,
    InvalidParameterError,
    NLError,
    NotApplicableError,
    PreconditionError,
    UnsupportedModelError,
    UsageError,
)
from .events import (
    Dependence,
    Event,
    Partition,
    SampleSpace,
    classify_dependence,
    count_independent_partitions,
    enumerate_independent_partitions,
    independence_cardinality_check,
)
from .model import (
    Family,
    NLModel,
    Submodel,
    check_coherence,
    check_two_monotone,
    classify,
    epsilon_contamination,
    make_submodel,
    pari_mutuel,
    recognize_submodel,
    total_variation,
    vacuous_model,
)
from .oracle import envelope_check, oracle_natural_extension, oracle_regular_extension, permutation_vertices

__version__ = "0.1.0"
