"""Exact combinatorics of partitions with a bounded largest-to-smallest gap.

Submodules:

* partitions  -- the two partition families: membership, enumeration,
                 counting tables, unranking, uniform sampling
* denumerants -- coin-problem counting and the growth estimate
* series      -- exact truncated power series and every generating function
* injections  -- the five classified rewrite rules, their inverses, and the
                 verification harness
* cli         -- the `gapparts` command-line tool

Hot loops run in a compiled extension when available; set
GAPPARTS_PURE_PYTHON=1 to force the pure-Python kernels.
"""

from ._backend import backend_name
from .denumerants import (
    CoinSystem,
    asymptotic_estimate,
    c_counts,
    denumerant_table,
    f_counts,
    ratio_check,
)
from .errors import (
    GappartsError,
    MembershipError,
    NotInImageError,
    ParameterError,
    RankRangeError,
)
from .injections import (
    ClassLabel,
    InjectionTrace,
    classify_c,
    classify_f,
    matching_c_classes,
    matching_f_classes,
    phi,
    phi1,
    phi2,
    phi3,
    phi4,
    phi5,
    psi1,
    psi2,
    psi3,
    psi4,
    psi5,
    psi_for_index,
    verify_exhaustive,
    verify_sampled,
)
from .partitions import (
    GapParams,
    Partition,
    count_c,
    count_f,
    count_table_c,
    count_table_f,
    enumerate_c,
    enumerate_f,
    enumeration_count_c,
    enumeration_count_f,
    injection_weight_threshold,
    is_member_c,
    is_member_f,
    sample_c,
    strong_gap_threshold,
    strong_quotient_threshold,
    unrank_c,
)
from .rng import SplitMix64
from .series import (
    TruncatedSeries,
    mul_geometric,
    pochhammer_inverse,
    positivity_scan,
    series_abc,
    series_c,
    series_d,
    series_e,
    series_f,
    series_h,
    series_h_direct,
    series_h_from_families,
)

__version__ = "0.1.0"
