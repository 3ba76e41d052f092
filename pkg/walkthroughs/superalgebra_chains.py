"""
sl(1|1) and sl(1|2) chains
==========================

For superalgebras the inverse character is an infinite series.  Only the
part below the queried charges contributes, so the sum is finite.  The
sl(1|2) case is the supersymmetric t-J model.
"""

from bethecount import mu_super, sl11_closed_form, super_completeness, tj_closed_form

L = 6

# sl(1|1): the stencil reproduces binomial(L-1, M)
print([mu_super("sl(1|1)", 1, L, M) for M in range(L)])
print([sl11_closed_form(L, M) for M in range(L)])

# sl(1|2): compare with the factorial closed form
for M1 in range(L + 1):
    print([(mu_super("sl(1|2)", 1, L, (M1, M2)), tj_closed_form(L, M1, M2)) for M2 in range(M1 + 1)])

print(super_completeness("sl(1|1)", 1, L).as_dict())
print(super_completeness("sl(1|2)", 1, L).as_dict())

# beyond spin 1/2 the counting is experimental and completeness may fail
print(super_completeness("sl(1|1)", 2, 3).as_dict())
