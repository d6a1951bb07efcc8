"""Unavoidable differences in unit-step walks on the Gaussian integers.

``d`` lies in the obstruction set ``A_n`` when every unit-step walk with two
terms differing by ``n`` also has two terms differing by ``d``. Membership is
decided by balanced division, avoidability is certified by explicit serpentine
walks, and a brute-force search cross-checks both on small instances.
"""

from .analytics import (
    AsymptoticRow,
    CardinalityBreakdown,
    ClassificationReport,
    Obstruction,
    asymptotic_report,
    cardinality_breakdown,
    q2_classify,
    q2_is_divisor_set,
    q4_classify,
    q5_classify,
    q5_exceptional_scan,
    theta,
)
from .arith import BalancedDivision, balanced_division, divisors, is_prime, isqrt
from .construction import AvoidanceCertificate, SegmentSpec, avoiding_walk, build_p1, build_p2, select_anchors
from .errors import (
    BudgetExceeded,
    DomainError,
    FixtureMismatch,
    FormulaMismatch,
    GWalkError,
    IndexOutOfRange,
    InternalConstructionFailure,
    NotAvoidable,
    VerdictContradiction,
    WalkError,
    WitnessNotFound,
)
from .membership import ObstructionSet, forces_from_complex, guaranteed_by_halfsquare, is_unavoidable, obstruction_set
from .oracle import SearchBox, default_box, oracle_is_avoidable, run_search, search_avoiding_path
from .walks import Point, Walk, contains_forbidden, difference_set, positive_real_differences

__version__ = "0.1.0"
