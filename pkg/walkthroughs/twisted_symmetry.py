"""
Twists, broken symmetry and branching
=====================================

Twisting the boundary breaks su(r+1) down to the subalgebra generated by
the roots whose twist combination vanishes.  The multiplicity of each
branched label then uses only the preserved roots.
"""

from bethecount import (SpinChainSpec, completeness_check, decomposition_from_subset, default_charge,
                        explain, mu_table, parse_root, parse_zeros, partial_inverse, preserved_roots)

# phase boundaries of su(4): which twist patterns keep which subalgebra
for pattern in ["", "t1", "t1,t3", "t1,t2", "t1+t2,t2+t3", "t1,t2,t3"]:
    decomp = preserved_roots(3, parse_zeros(pattern, 3))
    print("%-12s -> %s" % (pattern or "(generic)", decomp.describe()))

# su(3) with only alpha_2 preserved: su(2) + u(1)
decomp = decomposition_from_subset(2, [parse_root("a2")])
print("mu =", explain(partial_inverse(decomp)))

spec = SpinChainSpec(rank=2, twos=2, length=2)
for row in mu_table(spec, decomp, charge=default_charge(decomp), nonzero=True):
    print(row)

# the branched labels still account for all 36 states
print(completeness_check(spec, decomp).as_dict())
