"""Antipodal two-weight rank-metric codes, t-spreads and their Hamming expansions."""

from .errors import BudgetExceeded, ContradictionError, NotATWError
from .gfcore import (
    ExtensionField,
    FieldElement,
    SubfieldEmbedding,
    build_embedding,
    canonical_field,
    coords,
    parse_field_spec,
    tower,
)
from .fqlinalg import Subspace, enumerate_subspaces, gaussian_binomial, rank_over_subfield
from .rankcodes import (
    RankCode,
    WeightDistribution,
    codes_equivalent,
    gabidulin,
    hadamard_code,
    rank_weight_distribution,
)

from .spreads import Spread, desarguesian_spread, direct_sum_split, spread_from_atw, verify_spread
from .atw import analyze_atw, classify_half_distance, subfield_atw_code, block_two_weight_code, expand_mrd_to_atw, is_atw
from .hammingx import HammingCode, hamming_expansion, hamming_weight_distribution, verify_weight_correspondence
from .search import SearchJob, run_search

__version__ = "0.1.0"
