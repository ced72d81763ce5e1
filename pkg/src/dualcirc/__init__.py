"""Double-circulant binary self-dual [72,36,12] codes.

Construction from a single generator polynomial, exhaustive
weight-distribution proofs (all 2^36 messages), enumerator-parameter
extraction, and the polynomial search that rediscovers the tabulated
codes.
"""

from .analyze import (
    DOUBLY,
    NEITHER,
    SINGLY,
    CodeRecord,
    DoublyEvenParams,
    EnumeratorMismatchError,
    NotSelfDualError,
    SinglyEvenParams,
    WeightDist,
    classify_family,
    extract_params,
    in_row_space,
    is_self_dual,
    min_distance,
    rank_gf2,
    same_row_space,
    set_thread_count,
    verify_code,
    weight_distribution,
)
from .construct import (
    GenMatrix,
    Provenance,
    build_doubly_even_a3,
    build_pure_double_circulant,
    build_singly_even,
    circulant,
    identity_pair,
    interleave_tailbiting,
    raw_matrix,
    to_pure_double_circulant,
)
from .gf2 import (
    poly_add,
    poly_from_hex,
    poly_gcd,
    poly_inverse_mod,
    poly_mul_mod,
    poly_reverse,
    poly_to_bits,
    poly_to_hex,
    poly_weight,
)
from .search import SearchConfig, SearchReport, enumerate_candidates, gcd_prefilter, run_search
from .tables import FixtureRow, check_rows, load_fixture, sample_fixture

__version__ = "0.1.0"
