"""Arithmetic on polynomials and bit vectors over GF(2).

Polynomials are plain nonnegative integers: bit i is the coefficient of
x^i, so the hexadecimal value of a generator polynomial is the integer
itself (p_0 in the least significant bit).  The zero polynomial is 0 and
its degree is reported as None rather than a magic number.

The cyclic modulus x^k - 1 equals x^k + 1 over GF(2) and is represented
as the integer (1 << k) | 1.

Bit vectors of a declared width are also plain integers; operations that
depend on the width take it as an argument.
"""

from __future__ import annotations


def poly_degree(a: int) -> int | None:
    """Degree of polynomial a, or None for the zero polynomial."""
    if a < 0:
        raise ValueError("polynomials are nonnegative integers")
    if a == 0:
        return None
    return a.bit_length() - 1


def poly_weight(a: int) -> int:
    """Number of nonzero coefficients."""
    return a.bit_count()


def poly_add(a: int, b: int) -> int:
    """Sum of two polynomials (coefficient-wise XOR)."""
    return a ^ b


def cycle_modulus(k: int) -> int:
    """The polynomial x^k - 1 (= x^k + 1 over GF(2))."""
    if k <= 0:
        raise ValueError(f"cycle length must be positive, got {k}")
    return (1 << k) | 1


def poly_mul_mod(a: int, b: int, k: int) -> int:
    """Product a*b reduced modulo x^k - 1 (exponents wrap mod k).

    Both inputs must have degree < k.
    """
    if k <= 0:
        raise ValueError(f"cycle length must be positive, got {k}")
    if a.bit_length() > k or b.bit_length() > k:
        raise ValueError(f"operands must have degree < {k}")
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    # deg(prod) < 2k - 1, so one fold x^(k+i) -> x^i suffices
    mask = (1 << k) - 1
    return (prod & mask) ^ (prod >> k)


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of polynomial division, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b, for nonzero b."""
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    """Greatest common divisor via Euclid's algorithm.

    Over GF(2) every nonzero polynomial is monic, so the result is the
    unique monic gcd.  Both inputs zero is an error.
    """
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_inverse_mod(a: int, k: int) -> int:
    """Inverse f of a modulo x^k - 1, so that a*f = 1 (mod x^k - 1).

    Exists iff gcd(a, x^k - 1) = 1; otherwise raises ValueError naming
    the blocking gcd.
    """
    modulus = cycle_modulus(k)
    # extended Euclid: track s with s*a = r (mod modulus)
    r0, r1 = modulus, poly_mod(a, modulus)
    s0, s1 = 0, 1
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _poly_mul(q, s1)
    if r0 != 1:
        raise ValueError(
            f"no inverse: gcd(p, x^{k} - 1) = {poly_to_hex(r0)} (hex), not 1"
        )
    return poly_mod(s0, modulus)


def _poly_mul(a: int, b: int) -> int:
    """Carry-less product, no reduction."""
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    return prod


def poly_reverse(a: int, taps: int) -> int:
    """Reverse the coefficient sequence within a window of taps bits.

    Sends p_0..p_{taps-1} to p_{taps-1}..p_0.  Degree of a must be
    below taps.
    """
    if taps <= 0:
        raise ValueError(f"window must be positive, got {taps}")
    if a.bit_length() > taps:
        raise ValueError(
            f"degree {a.bit_length() - 1} does not fit a window of {taps} taps"
        )
    r = 0
    for i in range(taps):
        if (a >> i) & 1:
            r |= 1 << (taps - 1 - i)
    return r


def poly_from_hex(hex_str: str, taps: int) -> int:
    """Parse a generator polynomial from its hexadecimal form.

    The hex value is sum(p_i * 2^i); the constraint length (number of
    taps) is carried alongside because the encoding itself only pins the
    top set bit.  Bit taps-1 must be set and no bit above it.
    """
    value = int(hex_str, 16)
    if value <= 0:
        raise ValueError(f"polynomial {hex_str!r} is empty")
    if value.bit_length() > taps:
        raise ValueError(
            f"polynomial {hex_str!r} has a tap at position "
            f"{value.bit_length() - 1}, outside constraint length {taps}"
        )
    if not (value >> (taps - 1)) & 1:
        raise ValueError(
            f"polynomial {hex_str!r} does not set bit {taps - 1}; "
            f"constraint length {taps} mismatch"
        )
    return value


def poly_to_hex(a: int) -> str:
    """Uppercase hexadecimal form, no prefix, no leading zeros."""
    return format(a, "X")


def poly_to_bits(a: int, taps: int) -> str:
    """Tap string p_0 p_1 ... p_{taps-1} (coefficient order)."""
    return format(a, f"0{taps}b")[::-1]


def rotate_right(v: int, r: int, width: int) -> int:
    """Cyclic right rotation of a width-bit vector."""
    r %= width
    mask = (1 << width) - 1
    v &= mask
    return ((v << r) | (v >> (width - r))) & mask


def rotate_left(v: int, r: int, width: int) -> int:
    """Cyclic left rotation of a width-bit vector."""
    return rotate_right(v, width - (r % width), width)


def inner_product(u: int, v: int) -> int:
    """GF(2) inner product of two bit vectors."""
    return (u & v).bit_count() & 1
