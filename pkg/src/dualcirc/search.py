"""Exhaustive polynomial search for [72,36,12] self-dual codes.

Candidates are the canonical tap sequences (p_0 = p_{K-1} = 1) of each
constraint length in range, with the weight parity of the requested
family; of each polynomial/reversal pair only the numerically smaller
member is examined, since the two generate the same code with halves
swapped.  Survivors of the cheap filters get the full 2^36 enumeration
and are accepted exactly when the minimum distance hits the target.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterator

from .analyze import (
    DOUBLY,
    SINGLY,
    CodeRecord,
    WeightDist,
    _distinct_counts,
    _low_weight_witness,
    _run_full_histogram,
    extract_params,
    is_self_dual,
)
from .construct import (
    REVERSED_FORWARD,
    build_doubly_even_a3,
    build_singly_even,
)
from .gf2 import (
    cycle_modulus,
    poly_gcd,
    poly_reverse,
    poly_to_hex,
    poly_weight,
)

log = logging.getLogger(__name__)

BY_PARAMS = "params"
BY_POLYNOMIAL = "poly"


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters; the code length is fixed at 72 (size-36 circulants)."""

    family: str
    k_min: int
    k_max: int
    dedup: str = BY_PARAMS
    gcd_filter: bool = True
    early_exit: bool = True
    distance_target: int = 12
    shard_bits: int | None = None
    q_variant: str = REVERSED_FORWARD

    def __post_init__(self):
        if self.family not in (SINGLY, DOUBLY):
            raise ValueError(f"unknown family {self.family!r}")
        if not 2 <= self.k_min <= self.k_max <= 36:
            raise ValueError(
                f"need 2 <= k_min <= k_max <= 36, "
                f"got [{self.k_min}, {self.k_max}]"
            )
        if self.dedup not in (BY_PARAMS, BY_POLYNOMIAL):
            raise ValueError(f"unknown dedup rule {self.dedup!r}")


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    records: tuple[CodeRecord, ...]
    candidates_examined: int
    rejected_by_gcd: int
    rejected_not_self_dual: int
    rejected_by_distance: int
    verified: int
    wall_time: float

    def __post_init__(self):
        survivors = (
            self.rejected_by_gcd
            + self.rejected_not_self_dual
            + self.rejected_by_distance
            + self.verified
        )
        if survivors != self.candidates_examined:
            raise ValueError(
                f"candidate conservation violated: examined "
                f"{self.candidates_examined}, accounted {survivors}"
            )

    def summary(self) -> str:
        return (
            f"{self.config.family} K in [{self.config.k_min}, {self.config.k_max}]: "
            f"{self.candidates_examined} candidates, "
            f"{self.rejected_by_gcd} failed gcd, "
            f"{self.rejected_not_self_dual} not self-dual, "
            f"{self.rejected_by_distance} failed distance, "
            f"{self.verified} verified, {len(self.records)} records "
            f"({self.wall_time:.1f}s)"
        )


def enumerate_candidates(family: str, k_min: int, k_max: int) -> Iterator[tuple[int, int]]:
    """Yield (polynomial, taps) in (taps, hex value) order.

    Emits every canonical polynomial of the family parity, keeping only
    the numerically smaller of each {p, reverse(p)} pair.
    """
    if k_min < 2:
        raise ValueError(f"constraint length starts at 2, got k_min={k_min}")
    want_odd = family == SINGLY
    for taps in range(k_min, k_max + 1):
        top = 1 << (taps - 1)
        for mid in range(1 << max(0, taps - 2)):
            p = 1 | (mid << 1) | top
            if (poly_weight(p) % 2 == 1) != want_odd:
                continue
            if poly_reverse(p, taps) < p:
                continue
            yield p, taps


def gcd_prefilter(p: int, taps: int, family: str, size: int = 36) -> bool:
    """Necessary gcd conditions on a candidate polynomial.

    Singly even: both p and its reversal must be coprime to x^size - 1
    (full rank, and the pure double circulant form exists).  Doubly
    even: the even weight forces the factor x + 1; pass exactly when
    gcd(p, reverse(p), x^size - 1) is x + 1 and nothing more, leaving
    rank size - 1 before the row replacement.
    """
    modulus = cycle_modulus(size)
    rev = poly_reverse(p, taps)
    if family == SINGLY:
        return poly_gcd(p, modulus) == 1 and poly_gcd(rev, modulus) == 1
    return poly_gcd(poly_gcd(p, rev), modulus) == 0b11


def run_search(cfg: SearchConfig, progress=None) -> SearchReport:
    """Filter, verify and collect records for every candidate in range.

    Deterministic for a fixed config: candidates are scanned in (taps,
    hex) order and the report is independent of kernel sharding.  An
    enumerator-template mismatch on a fully verified code aborts the
    search: it means a construction-convention bug, not bad data.
    """
    build = build_singly_even if cfg.family == SINGLY else build_doubly_even_a3
    examined = by_gcd = not_sd = by_distance = verified = 0
    accepted: list[CodeRecord] = []
    start = time.perf_counter()
    for p, taps in enumerate_candidates(cfg.family, cfg.k_min, cfg.k_max):
        examined += 1
        if progress is not None:
            progress(examined, poly_to_hex(p), taps)
        if cfg.gcd_filter and not gcd_prefilter(p, taps, cfg.family):
            by_gcd += 1
            continue
        g = build(p, taps, 36, cfg.q_variant)
        if not is_self_dual(g):
            not_sd += 1
            continue
        if cfg.early_exit and _low_weight_witness(g, cfg.distance_target) is not None:
            by_distance += 1
            continue
        abort_below = cfg.distance_target if cfg.early_exit else 0
        hist, aborted = _run_full_histogram(g, cfg.shard_bits, abort_below)
        if aborted:
            by_distance += 1
            continue
        dist = WeightDist(_distinct_counts(hist, 36, 36, g.length), 36)
        d = dist.min_positive_weight()
        if d != cfg.distance_target:
            by_distance += 1
            continue
        params = extract_params(dist, cfg.family)
        verified += 1
        record = CodeRecord(
            family=cfg.family,
            taps=taps,
            poly_hex=poly_to_hex(p),
            poly_weight=poly_weight(p),
            d=d,
            params=params,
            dist=dist,
        )
        accepted.append(record)
        log.info("accepted %s/%d %s", record.poly_hex, taps, params)
    records = _dedup(accepted, cfg.dedup)
    return SearchReport(
        config=cfg,
        records=tuple(records),
        candidates_examined=examined,
        rejected_by_gcd=by_gcd,
        rejected_not_self_dual=not_sd,
        rejected_by_distance=by_distance,
        verified=verified,
        wall_time=time.perf_counter() - start,
    )


def _record_order(r: CodeRecord) -> tuple:
    return (r.family, r.taps, int(r.poly_hex, 16))


def _dedup(records: list[CodeRecord], rule: str) -> list[CodeRecord]:
    if rule == BY_POLYNOMIAL:
        return sorted(records, key=_record_order)
    best: dict[tuple, CodeRecord] = {}
    for r in records:
        key = (r.family, r.params_key())
        prior = best.get(key)
        if prior is None or (r.taps, r.poly_weight, int(r.poly_hex, 16)) < (
            prior.taps,
            prior.poly_weight,
            int(prior.poly_hex, 16),
        ):
            best[key] = r
    return sorted(best.values(), key=_record_order)
