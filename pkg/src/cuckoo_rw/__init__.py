"""Random-walk insertion for k-ary cuckoo hashing, with threshold solvers and
structural checks on the underlying random hypergraph."""

from .analytics import (
    CorePrediction,
    DomainError,
    ThresholdReport,
    core_prediction,
    lambda_k,
    load_threshold,
    phase_length,
    solve_xi_star,
    stripping_constant,
    threshold_report,
    walk_exponent,
)
from .hashspace import HashFamily, new_family
from .hypergraph import (
    CoreResult,
    Hypergraph,
    Orientation,
    check_density,
    check_expansion,
    distance_to_free,
    h_neighborhood_size,
    is_orientable,
    max_density,
    sample_hypergraph,
    strip_core,
)
from .table import CuckooTable, DuplicateItemError, InsertionOutcome, default_step_cap

__version__ = "0.1.0"
