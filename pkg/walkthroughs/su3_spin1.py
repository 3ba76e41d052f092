"""
The su(3) spin-1 chain on two sites
===================================

Two sites in the six-dimensional symmetric representation decompose
into irreps of dimensions 15, 15 and 6.  The multiplicities come from a
six-term difference stencil applied to the occupancy counts.
"""

from bethecount import (SpinChainSpec, explain, mu_table, peel, positive_roots, verma_inverse)

spec = SpinChainSpec(rank=2, twos=2, length=2)

# the stencil: product of (1 - t^alpha) over the three positive roots
inv = verma_inverse(positive_roots(2), 2)
print("mu =", explain(inv))

# every highest weight with its Young diagram, multiplicity and dimension
for row in mu_table(spec):
    print(row)

# an independent check: peel irreducible characters off the weight table
print(peel(spec))
