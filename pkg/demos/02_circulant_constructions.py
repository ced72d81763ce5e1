"""Building generator matrices from one polynomial, at a toy size.

Shows both families side by side with k = 8 circulants so the matrices
fit on screen: the two-circulant form for odd weight, and the
row-replacement form for even weight.  Run:
python demos/02_circulant_constructions.py
"""

from dualcirc import (
    build_doubly_even_a3,
    build_singly_even,
    interleave_tailbiting,
    is_self_dual,
    rank_gf2,
    to_pure_double_circulant,
)
from dualcirc.gf2 import poly_to_hex

K = 8  # circulant size for display


def show(title, g):
    print(f"\n{title} (rank {rank_gf2(g.rows)}, self-dual: {is_self_dual(g)})")
    for line in g.row_strings():
        print(" ", line[:K], "|", line[K:])


# odd weight -> forward circulant of p paired with its reversal
singly = build_singly_even(0b10011, 5, K)
show("singly even, p = 11001 (K=5)", singly)

# the same code in pure double circulant form [I | F]
f = to_pure_double_circulant(singly)
print("\npure double circulant f =", poly_to_hex(f))

# even weight -> first rows replaced by all-zeros / all-ones
doubly = build_doubly_even_a3(0b10111, 5, K)
show("doubly even row replacement, p = 11101 (K=5)", doubly)

# the tailbiting view interleaves the two halves column by column
mixed = interleave_tailbiting(singly)
print("\ninterleaved (tailbiting) rows:")
for line in mixed.row_strings():
    print(" ", line)
