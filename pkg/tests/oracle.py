"""Naive reference implementations used as independent test oracles.

Everything here works on explicit 0/1 lists and dictionaries, not on
the packed integers or kernels of the library, so agreement between the
two is meaningful.  Only usable at toy sizes (2^k message loops).
"""

from __future__ import annotations

from itertools import product


def matrix_bit_rows(g) -> list[list[int]]:
    """GenMatrix rows as explicit 0/1 lists, column 0 first."""
    n = g.length
    return [[(r >> j) & 1 for j in range(n)] for r in g.rows]


def naive_distribution(bit_rows: list[list[int]]) -> list[int]:
    """Weight counters by materializing every codeword.

    Walks all 2^k row combinations, collects the distinct codewords in a
    set (folding out any rank deficiency), and tallies their weights.
    """
    k = len(bit_rows)
    n = len(bit_rows[0])
    seen = set()
    for message in product([0, 1], repeat=k):
        word = [0] * n
        for take, row in zip(message, bit_rows):
            if take:
                word = [a ^ b for a, b in zip(word, row)]
        seen.add(tuple(word))
    counts = [0] * (n + 1)
    for word in seen:
        counts[sum(word)] += 1
    return counts


def naive_min_distance(bit_rows: list[list[int]]) -> int:
    counts = naive_distribution(bit_rows)
    for w in range(1, len(counts)):
        if counts[w]:
            return w
    raise ValueError("no nonzero codeword")


def schoolbook_mul_mod(a_bits: list[int], b_bits: list[int], k: int) -> list[int]:
    """Convolution with exponent wraparound, on coefficient lists."""
    out = [0] * k
    for i, ai in enumerate(a_bits):
        for j, bj in enumerate(b_bits):
            if ai and bj:
                out[(i + j) % k] ^= 1
    return out


def poly_to_list(p: int, k: int) -> list[int]:
    return [(p >> i) & 1 for i in range(k)]


def list_to_poly(bits: list[int]) -> int:
    v = 0
    for i, b in enumerate(bits):
        if b:
            v |= 1 << i
    return v


def trial_division_divides(d: int, a: int) -> bool:
    """Whether polynomial d divides a, by long division on bit lists."""
    if d == 0:
        return a == 0
    dd = d.bit_length() - 1
    rem = a
    while rem and rem.bit_length() - 1 >= dd:
        rem ^= d << (rem.bit_length() - 1 - dd)
    return rem == 0
