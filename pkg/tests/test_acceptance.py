"""End-to-end acceptance checks.

Each test prints one PASS/FAIL line with its wall time and time budget.
Run with ``pytest tests/test_acceptance.py -s`` to see them inline; they
are also echoed to the terminal when output is captured.
"""
import time
from contextlib import contextmanager
from itertools import chain, combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from bethecount.characters import CharacterInverse, apply_shift, explain, partial_inverse
from bethecount.counting import (branch_label, completeness_check, hook_length_mu, mu_partial, mu_table,
                                 mu_untwisted, reconstruct_c, young_from_magnons)
from bethecount.occupancy import (SpinChainSpec, brute_force_c, brute_force_table, c_coefficient,
                                  iter_magnons, kondo_c, kondo_nested)
from bethecount.peeling import peel
from bethecount.poly import SignedPolynomial
from bethecount.rootsys import (SubalgebraDecomposition, decomposition_from_subset, parse_root,
                                parse_zeros, positive_roots, preserved_roots)
from bethecount.superalg import dim_super, mu_super, super_completeness, tj_closed_form

pytestmark = pytest.mark.acceptance


@pytest.fixture
def criterion(capsys):
    """Context manager that times a block and prints one PASS/FAIL line."""
    @contextmanager
    def run(number, title, limit):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            secs = time.perf_counter() - t0
            ok = ok and secs < limit
            with capsys.disabled():
                print(f"\n{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} "
                      f"({secs:.2f}s, limit {limit}s)")
        assert secs < limit, f"criterion {number} took {secs:.1f}s, limit {limit}s"
    return run


def dec(r, *names):
    return decomposition_from_subset(r, [parse_root(n) for n in names])


def all_decompositions(r):
    roots = positive_roots(r)
    subsets = chain.from_iterable(combinations(roots, k) for k in range(len(roots) + 1))
    return {decomposition_from_subset(r, s) for s in subsets}


def test_criterion_01_su2_worked_example(criterion):
    with criterion(1, "su(2) s=1/2 L=4 counts", 1):
        spec = SpinChainSpec(1, 1, 4)
        assert c_coefficient(spec, 2) == 6
        assert c_coefficient(spec, 1) == 4
        assert mu_untwisted(spec, 2) == 2


def test_criterion_02_su3_spin1(criterion):
    with criterion(2, "su(3) s=1 L=2 multiplicities and 15+15+6", 1):
        spec = SpinChainSpec(2, 2, 2)
        assert [mu_untwisted(spec, M) for M in [(0, 0), (1, 0), (2, 0), (2, 1)]] == [1, 1, 1, 0]
        dims = sorted(int(r["dim"]) for r in mu_table(spec, nonzero=True) for _ in range(int(r["mu"])))
        assert dims == [6, 15, 15]
        assert sum(dims) == 36 == 6**2


def test_criterion_03_hook_length(criterion):
    with criterion(3, "hook-length equivalence r<=4, L<=8", 60):
        for r in range(1, 5):
            for L in range(1, 9):
                spec = SpinChainSpec(r, 1, L)
                for M in iter_magnons(r, L):
                    lam = young_from_magnons(spec, M)
                    assert mu_untwisted(spec, M) == (hook_length_mu(lam) if lam else 0), (r, L, M)


def test_criterion_04_completeness(criterion):
    with criterion(4, "completeness, untwisted and every partial decomposition", 120):
        for r in range(1, 4):
            decomps = all_decompositions(r)
            for twos in (1, 2):
                for L in range(1, 5):
                    spec = SpinChainSpec(r, twos, L)
                    assert completeness_check(spec).passed
                    for d in decomps:
                        rep = completeness_check(spec, d)
                        assert rep.passed and rep.total == comb(twos + r, r) ** L, (r, twos, L, d.blocks)


def test_criterion_05_su3_partial_twists(criterion):
    with criterion(5, "su(3) partial-twist stencils and 3^L", 30):
        expected = {"a1": "c(M1,M2) - c(M1-1,M2)",
                    "a2": "c(M1,M2) - c(M1,M2-1)",
                    "a1+a2": "c(M1,M2) - c(M1-1,M2-1)"}
        for root, formula in expected.items():
            d = dec(2, root)
            assert explain(partial_inverse(d)) == formula
            for L in range(1, 9):
                rep = completeness_check(SpinChainSpec(2, 1, L), d)
                assert rep.passed and rep.total == 3**L


PHASE_BOUNDARIES = {
    "su(3)+u(1)": ["t1,t2", "t1,t2+t3", "t2,t3", "t3,t1+t2"],
    "su(2)+su(2)+u(1)": ["t1,t3", "t2,t1+t2+t3", "t1+t2,t2+t3"],
}


def test_criterion_06_su4_partial_twist(criterion):
    with criterion(6, "su(4) four-term stencil and zero-pattern symmetries", 30):
        d = dec(3, "a1", "a3")
        assert explain(partial_inverse(d)) == "c(M1,M2,M3) - c(M1-1,M2,M3) - c(M1,M2,M3-1) + c(M1-1,M2,M3-1)"
        spec = SpinChainSpec(3, 1, 4)
        for M in iter_magnons(3, 4):
            m1, m2, m3 = M
            four = (c_coefficient(spec, M) - c_coefficient(spec, (m1 - 1, m2, m3))
                    - c_coefficient(spec, (m1, m2, m3 - 1)) + c_coefficient(spec, (m1 - 1, m2, m3 - 1)))
            if branch_label(spec, M, d) is not None:
                assert mu_partial(spec, M, d) == four
        for algebra, patterns in PHASE_BOUNDARIES.items():
            for pattern in patterns:
                assert preserved_roots(3, parse_zeros(pattern, 3)).describe() == algebra
        assert preserved_roots(3, parse_zeros("", 3)).describe() == "u(1)^3"
        for pattern in ["t1", "t2", "t3", "t1+t2", "t2+t3", "t1+t2+t3"]:
            assert preserved_roots(3, parse_zeros(pattern, 3)).describe() == "su(2)+u(1)^2"


def test_criterion_07_oracles(criterion):
    with criterion(7, "c vs brute force and mu vs character peeling", 300):
        for r in range(1, 4):
            for twos in range(1, 4):
                for L in range(1, 6):
                    spec = SpinChainSpec(r, twos, L)
                    brute = brute_force_table(spec)
                    for M in iter_magnons(r, spec.size):
                        assert c_coefficient(spec, M) == brute.get(M, 0), (r, twos, L, M)
        assert c_coefficient(SpinChainSpec(2, 2, 2), (-1, 0)) == brute_force_c(SpinChainSpec(2, 2, 2), (-1, 0)) == 0
        for r in range(1, 3):
            for twos in range(1, 3):
                for L in range(1, 5):
                    spec = SpinChainSpec(r, twos, L)
                    table = peel(spec)
                    for M in iter_magnons(r, spec.size):
                        assert mu_untwisted(spec, M) == table.get(M, 0), (r, twos, L, M)


def test_criterion_08_superalgebras(criterion):
    with criterion(8, "sl(1|1) and sl(1|2) multiplicities and completeness", 60):
        for L in range(1, 13):
            for M in range(L):
                assert mu_super("sl(1|1)", 1, L, M) == comb(L - 1, M)
            assert super_completeness("sl(1|1)", 1, L).total == 2**L
        for L in range(1, 11):
            for M1 in range(L + 1):
                for M2 in range(M1 + 1):
                    assert mu_super("sl(1|2)", 1, L, (M1, M2)) == tj_closed_form(L, M1, M2)
            assert super_completeness("sl(1|2)", 1, L).total == 3**L
            assert dim_super("sl(1|2)", L, (0, 0)) == 2 * L + 1
            for M1 in range(1, L + 1):
                for M2 in range(M1):
                    assert dim_super("sl(1|2)", L, (M1, M2)) == 4 * (L - 2 * M1 + M2 + 1)


def test_criterion_09_kondo(criterion):
    with criterion(9, "Kondo generating function vs nested sum", 60):
        for r in (1, 2):
            for twos in (1, 2):
                for imp in (0, 1, 2):
                    for L in range(1, 5):
                        bulk = SpinChainSpec(r, twos, L)
                        for M in iter_magnons(r, bulk.size + imp):
                            assert kondo_c(bulk, imp, M) == kondo_nested(bulk, imp, M), (r, twos, imp, L, M)


@settings(max_examples=40, deadline=None, database=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-6, 6), max_size=12),
       st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-6, 6), max_size=12),
       st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-6, 6), max_size=12),
       st.tuples(st.integers(0, 5), st.integers(0, 5)))
def _algebraic_properties(a, b, c, M):
    pa, pb, pc = (SignedPolynomial(2, x) for x in (a, b, c))
    assert pa * pb == pb * pa
    assert (pa * pb) * pc == pa * (pb * pc)
    assert pa * (pb + pc) == pa * pb + pa * pc
    f = lambda K: a.get(K, 0)
    inner = lambda K: apply_shift(CharacterInverse(pa), f, K)
    assert apply_shift(CharacterInverse(pb), inner, M) == apply_shift(CharacterInverse(pa * pb), f, M)


def test_criterion_10_properties(criterion):
    with criterion(10, "nonnegativity, reconstruction, composition, ring laws", 60):
        for r in range(1, 4):
            for twos in range(1, 4):
                for L in range(1, 6):
                    if comb(twos + r, r) ** L > 10**6:
                        continue
                    rows = mu_table(SpinChainSpec(r, twos, L))
                    assert all(int(row["mu"]) >= 0 for row in rows)
        for r, twos, L in [(1, 1, 5), (1, 2, 4), (2, 1, 3), (2, 2, 2), (2, 2, 3)]:
            spec = SpinChainSpec(r, twos, L)
            for M in iter_magnons(r, spec.size):
                assert reconstruct_c(spec, M) == c_coefficient(spec, M)
        spec = SpinChainSpec(2, 1, 3)
        for M in iter_magnons(2, 3):
            assert mu_partial(spec, M, SubalgebraDecomposition.trivial(2)) == c_coefficient(spec, M)
        _algebraic_properties()
