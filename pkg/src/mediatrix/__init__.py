"""Mediated digraphs, mediated set families and bounds on the mediation number."""

from .bounds import (
    BoundsRecord,
    UpperBound,
    best_upper_bound,
    bounds_record,
    bruck_ryser_excludes,
    f_lower,
    plane_known_nonexistent,
    strict_gap_flag,
    verify_extremal_family_is_plane,
)
from .constructions import (
    DifferenceCover,
    PlaneExtension,
    develop,
    extend_plane,
    is_difference_cover,
    min_difference_cover,
)
from .digraph import Digraph, closed_in_neighborhood, degree_sum_slack, is_mediated, max_in_degree, uncovered_pair
from .exact import decide, mu_exact
from .families import (
    BlockFamily,
    DesignParams,
    check_symmetric_design,
    digraph_from_family,
    family_from_digraph,
    find_sdr,
    is_mediated_family,
    is_symmetric,
    is_two_covering,
    mcard,
)
from .galois import FieldTables, ProjectivePlane, build_field, prime_power_decompose, projective_plane

__version__ = "0.1.0"
