"""Code analysis: rank, self-duality, exhaustive weight distributions,
family classification, and enumerator-parameter extraction.

The weight distribution of a [2k, k] code is proved, not sampled: the
full mode walks all 2^k messages (Gray order, sharded), the orbit mode
walks one representative per cyclic message class and multiplies by the
class size.  At the production size k = 36 that is 2^36 = 68719476736
messages; see _kernels for the inner loop.
"""

from __future__ import annotations

import hashlib
import logging
import time
from dataclasses import dataclass
from itertools import combinations

import numba
import numpy as np

from . import _kernels
from .construct import (
    PURE_DOUBLE_CIRCULANT,
    REVERSED_FORWARD,
    SINGLY_EVEN_A0,
    GenMatrix,
    build_doubly_even_a3,
    build_singly_even,
)
from .gf2 import poly_from_hex, poly_to_hex, poly_weight

log = logging.getLogger(__name__)

SINGLY = "singly"
DOUBLY = "doubly"
NEITHER = "neither"

# families whose rows are all simultaneous rotations of the first row,
# which is what makes the cyclic-orbit reduction of the message space valid
_ORBIT_FAMILIES = (SINGLY_EVEN_A0, PURE_DOUBLE_CIRCULANT)


class NotSelfDualError(Exception):
    """Generator matrix fails orthogonality or has deficient rank."""


class EnumeratorMismatchError(Exception):
    """No admissible enumerator template fits the distribution."""

    def __init__(self, message: str, coefficients: dict[str, int]):
        super().__init__(f"{message} (raw {coefficients})")
        self.coefficients = coefficients


@dataclass(frozen=True)
class WeightDist:
    """Codeword-weight counters A_0..A_n of a [n, rank] code."""

    counts: tuple[int, ...]
    rank: int

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def min_positive_weight(self) -> int:
        for w, c in enumerate(self.counts):
            if w > 0 and c > 0:
                return w
        raise ValueError("no nonzero codeword (zero-dimensional code)")

    def to_json_strings(self) -> list[str]:
        """Counters as decimal strings (they exceed 32 bits)."""
        return [str(c) for c in self.counts]

    def digest(self) -> str:
        """SHA-256 over the comma-joined decimal counters."""
        payload = ",".join(self.to_json_strings()).encode("ascii")
        return hashlib.sha256(payload).hexdigest()


@dataclass(frozen=True)
class SinglyEvenParams:
    enumerator_type: int  # 1 or 2
    gamma: int
    beta: int


@dataclass(frozen=True)
class DoublyEvenParams:
    alpha: int


def rank_gf2(rows: list[int] | tuple[int, ...]) -> int:
    """Rank over GF(2) by Gaussian elimination with XOR row reduction."""
    if not rows:
        raise ValueError("empty row list")
    basis: list[int] = []  # pivot rows, one per distinct lowest set bit
    rank = 0
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
            rank += 1
    return rank


def in_row_space(vec: int, rows: list[int] | tuple[int, ...]) -> bool:
    """Whether vec lies in the GF(2) span of rows."""
    return rank_gf2(list(rows) + [vec]) == rank_gf2(rows)


def same_row_space(a: list[int] | tuple[int, ...], b: list[int] | tuple[int, ...]) -> bool:
    """Whether two row sets span the same code."""
    ra = rank_gf2(a)
    if ra != rank_gf2(b):
        return False
    return rank_gf2(list(a) + list(b)) == ra


def is_self_dual(g: GenMatrix) -> bool:
    """True iff all row pairs (i <= j) are orthogonal and rank = k.

    Orthogonality including each row with itself forces even row
    weights; full rank makes the dimension exactly n/2.
    """
    rows = g.rows
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            if (rows[i] & rows[j]).bit_count() & 1:
                return False
    return rank_gf2(rows) == g.size


def _default_shard_bits(k: int) -> int:
    return 8 if k > 20 else 0


def _run_full_histogram(
    g: GenMatrix,
    shard_bits: int | None,
    abort_below: int,
    progress=None,
) -> tuple[np.ndarray, bool]:
    """Sharded Gray walk; returns (raw message-count histogram, aborted)."""
    k = g.size
    if shard_bits is None:
        shard_bits = _default_shard_bits(k)
    if not 0 <= shard_bits < k:
        raise ValueError(f"shard_bits must be in [0, {k}), got {shard_bits}")
    lane0, lane1 = _kernels.split_lanes(g.rows)
    t = k - shard_bits
    n_shards = 1 << shard_bits
    flag = np.zeros(1, dtype=np.uint8)
    hist = np.zeros(73, dtype=np.int64)
    group = max(1, n_shards // 16)
    start = time.perf_counter()
    done = 0
    for lo in range(0, n_shards, group):
        hi = min(lo + group, n_shards)
        hist += _kernels.gray_walk_histogram(
            lane0, lane1, k, lo, hi, t, abort_below, flag
        )
        done += (hi - lo) << t
        if progress is not None:
            progress(done, 1 << k)
        elapsed = time.perf_counter() - start
        if elapsed > 0:
            log.debug(
                "shards %d/%d, %.1fM msg/s", hi, n_shards, done / elapsed / 1e6
            )
        if flag[0]:
            return hist, True
    return hist, False


def _distinct_counts(hist: np.ndarray, k: int, rank: int, n: int) -> tuple[int, ...]:
    """Fold message multiplicity 2^(k - rank) out of a raw histogram."""
    mult = 1 << (k - rank)
    counts = []
    for w in range(n + 1):
        c = int(hist[w])
        if c % mult:
            raise AssertionError("histogram not divisible by message multiplicity")
        counts.append(c // mult)
    if any(hist[n + 1 :]):
        raise AssertionError("weight above code length")
    return tuple(counts)


def weight_distribution(
    g: GenMatrix,
    mode: str = "full",
    *,
    shard_bits: int | None = None,
    progress=None,
) -> WeightDist:
    """Exact weight distribution by exhaustive enumeration.

    mode "full" walks every message; mode "orbit_reduced" enumerates one
    representative per cyclic necklace of the message word and scales by
    the orbit size, which is valid only for constructions whose rows are
    all simultaneous rotations (two full circulants).  Both modes count
    distinct codewords; a rank-deficient matrix is tolerated and the
    deficiency is visible as rank < k.
    """
    k = g.size
    rank = rank_gf2(g.rows)
    if mode == "full":
        hist, _ = _run_full_histogram(g, shard_bits, 0, progress)
    elif mode == "orbit_reduced":
        prov = g.provenance
        if prov.family not in _ORBIT_FAMILIES or prov.interleaved:
            raise ValueError(
                f"orbit_reduced requires a two-full-circulant construction; "
                f"family {prov.family!r} does not guarantee the message "
                "rotation symmetry"
            )
        lane0, lane1 = _kernels.split_lanes(g.rows)
        hist = _kernels.necklace_histogram(lane0, lane1, k)
    else:
        raise ValueError(f"mode must be 'full' or 'orbit_reduced', got {mode!r}")
    return WeightDist(_distinct_counts(hist, k, rank, g.length), rank)


def _low_weight_witness(g: GenMatrix, below: int, max_message_weight: int = 4) -> int | None:
    """Smallest weight < below among codewords from light messages, or None.

    Scans all row combinations up to max_message_weight; a filter only,
    never a proof of distance.
    """
    best = None
    rows = g.rows
    for r in rows:
        w = r.bit_count()
        if 0 < w < below and (best is None or w < best):
            best = w
    for take in range(2, max_message_weight + 1):
        for combo in combinations(rows, take):
            c = 0
            for r in combo:
                c ^= r
            w = c.bit_count()
            if 0 < w < below and (best is None or w < best):
                best = w
    return best


def min_distance(g: GenMatrix, early_exit_below: int | None = None) -> int:
    """Minimum nonzero codeword weight.

    With early_exit_below = t, a witness of weight < t may be returned
    as soon as one is seen (light-message scan first, then an abortable
    walk); the returned value is then a valid upper bound but the call
    is a filter, not a proof.  Without it the walk is exhaustive and the
    result exact.
    """
    abort = early_exit_below or 0
    if abort:
        witness = _low_weight_witness(g, abort)
        if witness is not None:
            return witness
    k = g.size
    lane0, lane1 = _kernels.split_lanes(g.rows)
    shard_bits = _default_shard_bits(k)
    flag = np.zeros(1, dtype=np.uint8)
    best = int(
        _kernels.gray_walk_min_weight(lane0, lane1, k, k - shard_bits, abort, flag)
    )
    if best > 2 * k:
        raise ValueError("no nonzero codeword (zero-dimensional code)")
    return best


def classify_family(dist: WeightDist) -> str:
    """DOUBLY iff all weights = 0 mod 4, SINGLY iff even with some = 2 mod 4.

    NEITHER (some odd weight populated) is impossible for genuinely
    self-dual input and signals an upstream bug.
    """
    if any(dist.counts[w] for w in range(1, dist.n + 1, 2)):
        return NEITHER
    if any(dist.counts[w] for w in range(2, dist.n + 1, 4)):
        return SINGLY
    return DOUBLY


def extract_params(dist: WeightDist, family: str) -> SinglyEvenParams | DoublyEvenParams:
    """Read the free enumerator parameters off A_12..A_20.

    Singly even length-72 codes admit two templates:
      type 1: A_12 = 2b, A_14 = 8640 - 64g, A_16 = 124281 - 24b + 384g
      type 2: A_12 = 2b, A_14 = 7616 - 64g, A_16 = 134521 - 24b + 384g
    Doubly even codes admit one:
      A_12 = 4398 + a, A_16 = 197073 - 12a, A_20 = 18396972 + 66a
    All template equations must hold simultaneously; a mismatch is a
    hard error carrying the raw coefficients (it indicates a
    construction-convention bug, not data).
    """
    if dist.n != 72:
        raise ValueError(f"enumerator templates apply to length 72, not {dist.n}")
    observed = classify_family(dist)
    if observed != family:
        raise EnumeratorMismatchError(
            f"expected a {family} even distribution, classified {observed}",
            _raw_coefficients(dist),
        )
    a12, a14, a16, a20 = (dist.counts[w] for w in (12, 14, 16, 20))
    if family == DOUBLY:
        alpha = a12 - 4398
        if a16 != 197073 - 12 * alpha or a20 != 18396972 + 66 * alpha:
            raise EnumeratorMismatchError(
                f"doubly even template inconsistent at alpha={alpha}",
                _raw_coefficients(dist),
            )
        return DoublyEvenParams(alpha)
    if a12 % 2:
        raise EnumeratorMismatchError(
            "A_12 is odd; no template has half-integral beta",
            _raw_coefficients(dist),
        )
    beta = a12 // 2
    fits = []
    for enum_type, a14_base, a16_base in ((1, 8640, 124281), (2, 7616, 134521)):
        gamma, rem = divmod(a14_base - a14, 64)
        if rem == 0 and a16 == a16_base - 24 * beta + 384 * gamma:
            fits.append(SinglyEvenParams(enum_type, gamma, beta))
    if not fits:
        raise EnumeratorMismatchError(
            "neither singly even template fits", _raw_coefficients(dist)
        )
    if len(fits) > 1:
        log.info(
            "both singly even templates consistent (beta=%d); preferring type 1",
            beta,
        )
    return fits[0]


def _raw_coefficients(dist: WeightDist) -> dict[str, int]:
    return {f"A_{w}": dist.counts[w] for w in (12, 14, 16, 20)}


def set_thread_count(threads: int | None) -> None:
    """Clamp and apply the worker count for the enumeration kernels."""
    if threads is None:
        return
    if threads < 1:
        raise ValueError(f"thread count must be positive, got {threads}")
    numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))


@dataclass(frozen=True)
class CodeRecord:
    """One fully verified code: the unit of persistence and regression."""

    family: str
    taps: int
    poly_hex: str
    poly_weight: int
    d: int
    params: SinglyEvenParams | DoublyEvenParams
    dist: WeightDist

    def __post_init__(self):
        if self.dist.n == 72 and self.d > 16:
            # d <= 4*floor(n/24) + 4 for self-dual codes of this length
            raise ValueError(f"distance {self.d} exceeds the extremality bound 16")

    def params_key(self) -> tuple[int, ...]:
        """(gamma, beta) or (alpha,): the dedup identity of the record."""
        if isinstance(self.params, SinglyEvenParams):
            return (self.params.gamma, self.params.beta)
        return (self.params.alpha,)

    def to_json_dict(self) -> dict:
        out: dict = {
            "family": self.family,
            "k": self.taps,
            "hex": self.poly_hex,
            "ones": self.poly_weight,
            "d": self.d,
        }
        if isinstance(self.params, SinglyEvenParams):
            out["gamma"] = self.params.gamma
            out["beta"] = self.params.beta
            out["enumerator_type"] = self.params.enumerator_type
        else:
            out["alpha"] = self.params.alpha
        out["dist_sha"] = self.dist.digest()
        return out


def verify_code(
    family: str,
    hex_str: str,
    taps: int,
    *,
    size: int = 36,
    mode: str = "full",
    q_variant: str = REVERSED_FORWARD,
    shard_bits: int | None = None,
    progress=None,
) -> CodeRecord:
    """Build a code from (family, hex, taps) and prove its parameters.

    Raises ValueError for parse/parity problems, NotSelfDualError when
    the construction is not self-dual, EnumeratorMismatchError when no
    admissible template fits the measured distribution.
    """
    if family not in (SINGLY, DOUBLY):
        raise ValueError(f"family must be {SINGLY!r} or {DOUBLY!r}, got {family!r}")
    p = poly_from_hex(hex_str, taps)
    build = build_singly_even if family == SINGLY else build_doubly_even_a3
    g = build(p, taps, size, q_variant)
    if not is_self_dual(g):
        raise NotSelfDualError(
            f"{family} construction from {hex_str}/{taps} is not self-dual"
        )
    dist = weight_distribution(g, mode, shard_bits=shard_bits, progress=progress)
    params = extract_params(dist, family)
    return CodeRecord(
        family=family,
        taps=taps,
        poly_hex=poly_to_hex(p),
        poly_weight=poly_weight(p),
        d=dist.min_positive_weight(),
        params=params,
        dist=dist,
    )
