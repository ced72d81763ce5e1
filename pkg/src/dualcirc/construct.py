"""Generator-matrix constructions from a single generator polynomial.

All matrices here are k x 2k over GF(2), laid out as [P | Q] where P and
Q are k x k circulants.  A row is a single integer: bits 0..k-1 are the
P half, bits k..2k-1 the Q half.  The production size is k = 36 (length
72 codes); every constructor also accepts smaller k so the combinatorial
properties can be brute-forced at toy sizes.

Two conventions exist for the Q half:

* ``reversed``: forward circulant whose first row is the reversed tap
  sequence p_{K-1}..p_0 (the default), or
* ``inverse``: left-shifting circulant with the same first row p.

The two produce Q halves that differ by the fixed column permutation
j -> (K-1-j) mod k, hence codes with identical weight distributions; the
flag exists so both readings can be exercised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import (
    cycle_modulus,
    poly_gcd,
    poly_inverse_mod,
    poly_mul_mod,
    poly_reverse,
    poly_weight,
    rotate_left,
    rotate_right,
)

SINGLY_EVEN_A0 = "singly_even_a0"
DOUBLY_EVEN_A3 = "doubly_even_a3"
PURE_DOUBLE_CIRCULANT = "pure_double_circulant"
RAW = "raw"

REVERSED_FORWARD = "reversed"
INVERSE = "inverse"


@dataclass(frozen=True)
class Provenance:
    """How a generator matrix was built."""

    family: str
    poly: int | None = None
    taps: int | None = None
    q_variant: str = REVERSED_FORWARD
    interleaved: bool = False


@dataclass(frozen=True)
class GenMatrix:
    """k x 2k generator matrix with construction provenance.

    rows[i] is a 2k-bit integer; size is the circulant dimension k.
    """

    rows: tuple[int, ...]
    size: int
    provenance: Provenance

    def __post_init__(self):
        width = 2 * self.size
        if len(self.rows) != self.size:
            raise ValueError(f"expected {self.size} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r.bit_length() > width:
                raise ValueError(f"row does not fit in {width} bits")

    @property
    def length(self) -> int:
        return 2 * self.size

    def row_strings(self) -> list[str]:
        """Rows as 0/1 strings, column 0 first (debug serialization)."""
        return [format(r, f"0{self.length}b")[::-1] for r in self.rows]


def circulant(first_row: int, k: int, direction: str = "right") -> list[int]:
    """k x k circulant: row i is first_row cyclically shifted i times.

    direction "right" gives the forward circulant, "left" the inverse
    circulant.
    """
    if k < 1:
        raise ValueError(f"circulant size must be >= 1, got {k}")
    if first_row.bit_length() > k:
        raise ValueError(f"first row does not fit in {k} bits")
    if direction == "right":
        return [rotate_right(first_row, i, k) for i in range(k)]
    if direction == "left":
        return [rotate_left(first_row, i, k) for i in range(k)]
    raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")


def _check_canonical(p: int, taps: int, size: int) -> None:
    if taps > size:
        raise ValueError(f"constraint length {taps} exceeds circulant size {size}")
    if p <= 0:
        raise ValueError("generator polynomial must be nonzero")
    if not p & 1:
        raise ValueError("canonical form requires p_0 = 1")
    if p.bit_length() != taps:
        raise ValueError(
            f"canonical form requires p_{taps - 1} = 1 "
            f"(got degree {p.bit_length() - 1})"
        )


def _pair_rows(p: int, q: int, size: int, q_direction: str) -> list[int]:
    left = circulant(p, size, "right")
    right = circulant(q, size, q_direction)
    return [l | (r << size) for l, r in zip(left, right)]


def build_singly_even(
    p: int, taps: int, size: int = 36, q_variant: str = REVERSED_FORWARD
) -> GenMatrix:
    """[P | Q] from an odd-weight polynomial.

    P is the forward circulant of (p_0..p_{K-1}, 0..0); Q pairs it with
    the reversed tap sequence (see module docstring for the variant
    flag).  Every row pair is orthogonal by the shift-correlation
    argument, so the result generates a self-dual code whenever it has
    full rank.
    """
    _check_canonical(p, taps, size)
    if poly_weight(p) % 2 == 0:
        raise ValueError(
            f"even-weight polynomial (weight {poly_weight(p)}) belongs to "
            "the doubly even family"
        )
    rows = _q_variant_rows(p, taps, size, q_variant)
    return GenMatrix(
        tuple(rows), size, Provenance(SINGLY_EVEN_A0, p, taps, q_variant)
    )


def _q_variant_rows(p: int, taps: int, size: int, q_variant: str) -> list[int]:
    if q_variant == REVERSED_FORWARD:
        return _pair_rows(p, poly_reverse(p, taps), size, "right")
    if q_variant == INVERSE:
        return _pair_rows(p, p, size, "left")
    raise ValueError(f"unknown Q variant {q_variant!r}")


def build_doubly_even_a3(
    p: int, taps: int, size: int = 36, q_variant: str = REVERSED_FORWARD
) -> GenMatrix:
    """Row-replacement construction for even-weight polynomials.

    Starts from the same [P | Q] pair as build_singly_even, then
    overwrites row 0 with (all zeros | all ones).  The discarded row is
    a linear combination of the remaining ones, so the span loses
    nothing and gains the half-ones vector.
    """
    _check_canonical(p, taps, size)
    if poly_weight(p) % 2 == 1:
        raise ValueError(
            f"odd-weight polynomial (weight {poly_weight(p)}) belongs to "
            "the singly even family"
        )
    rows = _q_variant_rows(p, taps, size, q_variant)
    rows[0] = ((1 << size) - 1) << size
    return GenMatrix(
        tuple(rows), size, Provenance(DOUBLY_EVEN_A3, p, taps, q_variant)
    )


def build_pure_double_circulant(f: int, size: int = 36) -> GenMatrix:
    """[I | F] with F the forward circulant of f."""
    if f.bit_length() > size:
        raise ValueError(f"f does not fit in {size} bits")
    rows = _pair_rows(1, f, size, "right")
    return GenMatrix(tuple(rows), size, Provenance(PURE_DOUBLE_CIRCULANT, f, size))


def raw_matrix(rows: list[int], size: int) -> GenMatrix:
    """Wrap explicit rows (debug / toy fixtures)."""
    return GenMatrix(tuple(rows), size, Provenance(RAW))


def identity_pair(size: int) -> GenMatrix:
    """The duplicated-halves code [I | I]."""
    rows = [(1 << i) | (1 << (size + i)) for i in range(size)]
    return GenMatrix(tuple(rows), size, Provenance(RAW))


def to_pure_double_circulant(g: GenMatrix) -> int:
    """Convert a two-circulant build to pure double circulant form.

    Returns f = p^{-1} q (mod x^k - 1), defined whenever
    gcd(p, x^k - 1) = 1; then [I | circulant(f)] spans the same code.
    Raises ValueError when p is not coprime to x^k - 1 (always the case
    for the doubly even family, whose polynomials are divisible by
    x + 1).
    """
    prov = g.provenance
    if prov.poly is None or prov.interleaved:
        raise ValueError("conversion needs two-circulant provenance")
    if prov.family == DOUBLY_EVEN_A3:
        raise ValueError(
            "doubly even row-replacement codes are not pure double circulants"
        )
    if prov.q_variant != REVERSED_FORWARD:
        raise ValueError("conversion is defined for the reversed-forward layout")
    p = prov.poly
    q = poly_reverse(p, prov.taps)
    f_inv = poly_inverse_mod(p, g.size)  # raises naming the gcd if not coprime
    return poly_mul_mod(f_inv, q, g.size)


def interleave_tailbiting(g: GenMatrix) -> GenMatrix:
    """Column-interleave [P | Q] into the tailbiting layout.

    P column j and Q column j move to positions 2j and 2j+1, so row 0
    becomes the mixed tap string (p_0, q_0, p_1, q_1, ...) and each
    later row is the previous one cyclically shifted by two.  A pure
    column permutation: the weight distribution is untouched.
    """
    k = g.size
    new_rows = []
    for r in g.rows:
        out = 0
        for j in range(k):
            out |= ((r >> j) & 1) << (2 * j)
            out |= ((r >> (k + j)) & 1) << (2 * j + 1)
        new_rows.append(out)
    prov = g.provenance
    return GenMatrix(
        tuple(new_rows),
        k,
        Provenance(prov.family, prov.poly, prov.taps, prov.q_variant, True),
    )


def conversion_possible(p: int, size: int = 36) -> bool:
    """Whether gcd(p, x^size - 1) = 1, i.e. theorem-1.3 conversion applies."""
    return poly_gcd(p, cycle_modulus(size)) == 1
