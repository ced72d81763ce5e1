"""Tour of the GF(2) polynomial layer.

Polynomials are plain integers: bit i holds the coefficient of x^i, so
the hexadecimal strings used in the code tables are literally the
polynomial values.  Run: python demos/01_polynomial_arithmetic.py
"""

from dualcirc import (
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
from dualcirc.gf2 import cycle_modulus

# the generator polynomial 34F with constraint length 10
p = poly_from_hex("34F", 10)
print("p      =", poly_to_bits(p, 10), f"(hex {poly_to_hex(p)}, weight {poly_weight(p)})")

# its reversal: the second generator of the pair
q = poly_reverse(p, 10)
print("rev(p) =", poly_to_bits(q, 10), f"(hex {poly_to_hex(q)})")

# addition is XOR: p + p = 0
print("p + p  =", poly_add(p, p))

# multiplication wraps exponents modulo x^36 - 1
print("x * x^35 mod (x^36 - 1) =", poly_mul_mod(0b10, 1 << 35, 36))

# odd-weight polynomials are invertible modulo x^36 - 1 ...
f = poly_inverse_mod(p, 36)
print("p * p^-1 mod (x^36 - 1) =", poly_mul_mod(p, f, 36))

# ... even-weight ones are not: the factor x + 1 blocks the inverse
even = poly_from_hex("12F", 9)
print("gcd(12F, x^36 - 1)      =", poly_to_hex(poly_gcd(even, cycle_modulus(36))), "(x + 1)")
try:
    poly_inverse_mod(even, 36)
except ValueError as exc:
    print("inverse of 12F:", exc)
