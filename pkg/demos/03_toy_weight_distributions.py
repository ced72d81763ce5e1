"""Weight distributions at toy sizes, cross-checked three ways.

At small circulant sizes the 2^k message space can be brute-forced
naively, so the bit-parallel Gray walk and the necklace-orbit walk can
both be checked against first principles.  Run:
python demos/03_toy_weight_distributions.py
"""

from itertools import product
from math import comb

from dualcirc import build_singly_even, identity_pair, weight_distribution

# --- the duplicated-halves code [I | I]: a closed form -----------------
# every codeword is (v | v), so A_{2w} = C(k, w)
for k in (4, 6, 8):
    dist = weight_distribution(identity_pair(k))
    expected = {2 * w: comb(k, w) for w in range(k + 1)}
    got = {w: c for w, c in enumerate(dist.counts) if c}
    print(f"[I|I] k={k}: {got} == binomials: {got == expected}")

# --- a two-circulant toy, against a from-scratch enumeration ----------
g = build_singly_even(0b1011, 4, 6)
naive = [0] * 13
for message in product([0, 1], repeat=6):
    word = 0
    for take, row in zip(message, g.rows):
        if take:
            word ^= row
    naive[bin(word).count("1")] += 1
dist = weight_distribution(g)
print("\ntwo-circulant toy, k=6:")
print("  kernel:", list(dist.counts))
print("  naive: ", naive)

# --- orbit mode: one representative per cyclic message class ----------
orbit = weight_distribution(g, "orbit_reduced")
print("  orbit: ", list(orbit.counts))
print("  agree: ", dist.counts == orbit.counts)
