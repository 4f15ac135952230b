"""Numerical laboratory for entanglement monogamy of three-qubit pure states.

Closed-form entanglement measures of the canonical GHZ-class and W-class
parametrizations, cross-validated against a state-vector pipeline, with
monogamy-score sweeps, region scans, boundary finding and Monte-Carlo
validation of local-conversion volumes.
"""

from .linalg import (
    det2,
    eig_hermitian,
    kron,
    partial_trace,
)
from .measures import (
    concurrence_pure_bipartition,
    eof_from_concurrence,
    generalized_concurrence,
    ghz_closed_form_concurrences,
    reduced_pair_concurrences,
    tangle,
    w_closed_form_concurrences,
    wootters_concurrence,
)
from .monogamy import (
    MeasureRecord,
    ScanResult,
    batch_evaluate,
    evaluate,
    find_boundary,
    scan_region,
)
from .operational import (
    VolumeEstimate,
    accessible_entanglement,
    estimate_accessible_volume,
    estimate_source_volume,
    locc_convertible,
    phase_alignment,
    phase_volume_factor,
    source_entanglement,
)
from .states import (
    FamilyTag,
    GhzParams,
    SampleSpec,
    WParams,
    build_ghz,
    build_w,
    classify,
    classify_ghz,
    ghz_normalizer,
    sample_family,
)

__version__ = "0.1.0"

__all__ = [
    "FamilyTag", "GhzParams", "WParams", "SampleSpec", "MeasureRecord",
    "ScanResult", "VolumeEstimate",
    "kron", "partial_trace", "eig_hermitian", "det2",
    "build_ghz", "build_w", "classify", "classify_ghz", "ghz_normalizer",
    "sample_family",
    "wootters_concurrence", "concurrence_pure_bipartition",
    "eof_from_concurrence", "reduced_pair_concurrences",
    "ghz_closed_form_concurrences", "w_closed_form_concurrences",
    "tangle", "generalized_concurrence",
    "phase_alignment", "phase_volume_factor", "source_entanglement",
    "accessible_entanglement", "locc_convertible",
    "estimate_source_volume", "estimate_accessible_volume",
    "evaluate", "batch_evaluate", "scan_region", "find_boundary",
]
