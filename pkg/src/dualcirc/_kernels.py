"""Bit-parallel enumeration kernels (numba).

The hot loops walk the 2^k message space of a k x 2k generator matrix.
Codewords are held in two 64-bit lanes (lane 0 = columns 0..63, lane 1 =
columns 64..); one step of the Gray-code walk is two XORs and two
hardware popcounts.  The message space is partitioned into shards by
fixing the top bits, so shards run in parallel and counters merge by
plain addition (the merged histogram is independent of sharding).

Intrinsics follow the llvmlite builder pattern so popcount/cttz compile
to single instructions.
"""

from __future__ import annotations

import numpy as np
import numba
import numba.extending
import numba.types
from llvmlite import ir
from numba import njit, prange

# inner loops poll the abort flag once per block
_BLOCK_BITS = 20


@numba.extending.intrinsic
def _popcount(tyctx, x):
    if isinstance(x, numba.types.Integer):
        sig = numba.types.uint64(numba.types.uint64)

        def impl(cgctx, builder, sig, args):
            return builder.ctpop(args[0])

        return sig, impl


@numba.extending.intrinsic
def _cttz(tyctx, x):
    if isinstance(x, numba.types.Integer):
        sig = numba.types.uint64(numba.types.uint64)

        def impl(cgctx, builder, sig, args):
            return builder.cttz(args[0], ir.Constant(ir.IntType(1), 0))

        return sig, impl


@njit(cache=True, parallel=True)
def gray_walk_histogram(rows0, rows1, n_rows, shard_lo, shard_hi, t, abort_below, flag):
    """Weight histogram over shards [shard_lo, shard_hi).

    Shard s fixes message bits t..n_rows-1 to the bits of s and walks
    the remaining 2^t messages in Gray-code order.  If abort_below > 0,
    witnessing a nonzero weight under it sets flag[0] and stops all
    shards at the next block boundary.

    Returns an int64 histogram of length 73 (indices above 2*n_rows stay
    zero for toy sizes).
    """
    n_shards = shard_hi - shard_lo
    steps = np.uint64(1) << np.uint64(t)
    block = np.uint64(1) << np.uint64(min(t, _BLOCK_BITS))
    out = np.zeros((n_shards, 73), dtype=np.int64)
    for idx in prange(n_shards):
        s = shard_lo + idx
        counts = np.zeros(73, dtype=np.int64)
        c0 = np.uint64(0)
        c1 = np.uint64(0)
        for b in range(n_rows - t):
            if (s >> b) & 1:
                c0 ^= rows0[t + b]
                c1 ^= rows1[t + b]
        w = _popcount(c0) + _popcount(c1)
        counts[w] += 1
        i = np.uint64(1)
        while i < steps and flag[0] == 0:
            stop = i + block
            if stop > steps:
                stop = steps
            while i < stop:
                j = _cttz(i)
                c0 ^= rows0[j]
                c1 ^= rows1[j]
                w = _popcount(c0) + _popcount(c1)
                counts[w] += 1
                i += np.uint64(1)
            if abort_below > 0:
                for v in range(1, abort_below):
                    if counts[v] != 0:
                        flag[0] = 1
        out[idx] = counts
    return out.sum(axis=0)


@njit(cache=True, parallel=True)
def gray_walk_min_weight(rows0, rows1, n_rows, t, abort_below, flag):
    """Minimum nonzero codeword weight by the same sharded Gray walk.

    Kept separate from the histogram kernel so the minimum-distance and
    weight-distribution computations stay independent cross-checks.
    """
    n_shards = 1 << (n_rows - t)
    steps = np.uint64(1) << np.uint64(t)
    block = np.uint64(1) << np.uint64(min(t, _BLOCK_BITS))
    mins = np.full(n_shards, 73, dtype=np.int64)
    for s in prange(n_shards):
        best = np.int64(73)
        c0 = np.uint64(0)
        c1 = np.uint64(0)
        for b in range(n_rows - t):
            if (s >> b) & 1:
                c0 ^= rows0[t + b]
                c1 ^= rows1[t + b]
        w = np.int64(_popcount(c0) + _popcount(c1))
        if w != 0 and w < best:
            best = w
        i = np.uint64(1)
        while i < steps and flag[0] == 0:
            stop = i + block
            if stop > steps:
                stop = steps
            while i < stop:
                j = _cttz(i)
                c0 ^= rows0[j]
                c1 ^= rows1[j]
                w = np.int64(_popcount(c0) + _popcount(c1))
                if w != 0 and w < best:
                    best = w
                i += np.uint64(1)
            if abort_below > 0 and best < abort_below:
                flag[0] = 1
        mins[s] = best
    return mins.min()


@njit(cache=True)
def _chunk_tables(rows0, rows1, n_rows):
    # XOR-encode tables for the three 12-bit message chunks
    t0 = np.zeros((2, 4096), dtype=np.uint64)
    t1 = np.zeros((2, 4096), dtype=np.uint64)
    t2 = np.zeros((2, 4096), dtype=np.uint64)
    for v in range(1, 4096):
        j = np.int64(_cttz(np.uint64(v)))
        rest = v & (v - 1)
        if j < n_rows:
            t0[0, v] = t0[0, rest] ^ rows0[j]
            t0[1, v] = t0[1, rest] ^ rows1[j]
        else:
            t0[0, v] = t0[0, rest]
            t0[1, v] = t0[1, rest]
        if 12 + j < n_rows:
            t1[0, v] = t1[0, rest] ^ rows0[12 + j]
            t1[1, v] = t1[1, rest] ^ rows1[12 + j]
        else:
            t1[0, v] = t1[0, rest]
            t1[1, v] = t1[1, rest]
        if 24 + j < n_rows:
            t2[0, v] = t2[0, rest] ^ rows0[24 + j]
            t2[1, v] = t2[1, rest] ^ rows1[24 + j]
        else:
            t2[0, v] = t2[0, rest]
            t2[1, v] = t2[1, rest]
    return t0, t1, t2


@njit(cache=True)
def necklace_histogram(rows0, rows1, n_rows):
    """Weight histogram via one representative per cyclic message class.

    Enumerates binary necklaces of length n_rows in lexicographic order
    (iterative prenecklace scheme); a necklace of period p stands for
    its p distinct rotations, all of which encode to codewords of equal
    weight when every matrix row is a simultaneous rotation of row 0.
    Counts therefore sum to 2^n_rows exactly, as in the full walk.
    """
    t0, t1, t2 = _chunk_tables(rows0, rows1, n_rows)
    counts = np.zeros(73, dtype=np.int64)
    n = n_rows
    a = np.zeros(n + 1, dtype=np.int64)
    m = np.uint64(0)
    mask12 = np.uint64(4095)
    counts[0] += 1  # all-zero message, period 1
    while True:
        i = n
        while i > 0 and a[i] == 1:
            i -= 1
        if i == 0:
            break
        a[i] = 1
        m |= np.uint64(1) << np.uint64(i - 1)
        p = i
        for j in range(i + 1, n + 1):
            v = a[j - p]
            a[j] = v
            if v:
                m |= np.uint64(1) << np.uint64(j - 1)
            else:
                m &= ~(np.uint64(1) << np.uint64(j - 1))
        if n % p == 0:
            lo = m & mask12
            mid = (m >> np.uint64(12)) & mask12
            hi = (m >> np.uint64(24)) & mask12
            c0 = t0[0, lo] ^ t1[0, mid] ^ t2[0, hi]
            c1 = t0[1, lo] ^ t1[1, mid] ^ t2[1, hi]
            w = _popcount(c0) + _popcount(c1)
            counts[w] += p
    return counts


def split_lanes(rows: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Split 2k-bit row integers into (low 64, high) uint64 lane arrays."""
    lane0 = np.array([r & 0xFFFFFFFFFFFFFFFF for r in rows], dtype=np.uint64)
    lane1 = np.array([r >> 64 for r in rows], dtype=np.uint64)
    return lane0, lane1
