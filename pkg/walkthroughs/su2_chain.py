"""
Counting states of the spin-1/2 Heisenberg chain
================================================

A chain of four spin-1/2 sites has 2**4 states.  Grouping them by the
number of flipped spins M and then by total spin shows how many Bethe
states sit on each highest weight.
"""

from bethecount import SpinChainSpec, c_coefficient, completeness_check, mu_untwisted

spec = SpinChainSpec(rank=1, twos=1, length=4)

# c(M) counts the ways of placing M flipped spins on L sites
for M in range(spec.size + 1):
    print("c(%d) = %d" % (M, c_coefficient(spec, M)))

# the multiplicity of the spin-(L/2 - M) multiplet is c(M) - c(M-1)
for M in range(spec.length // 2 + 1):
    print("mu(%d) = %d" % (M, mu_untwisted(spec, M)))

# every state is accounted for: sum of mu times (2j+1) is 2**L
print(completeness_check(spec).as_dict())
