"""
A chain with one impurity site
==============================

Adding one site in a different representation multiplies the generating
function by that site's specialized Schur polynomial.  The same count
can be written as a nested sum over the impurity's states.
"""

from bethecount import SpinChainSpec, kondo_c, kondo_nested, mixed_completeness

bulk = SpinChainSpec(rank=2, twos=1, length=3)

for M in [(0, 0), (1, 0), (2, 1), (3, 1), (4, 2)]:
    print(M, kondo_c(bulk, 2, M), kondo_nested(bulk, 2, M))

# completeness for the mixed chain: 6 impurity states times 3**3 bulk states
print(mixed_completeness([(2,)] + [(1,)] * 3, 2).as_dict())
