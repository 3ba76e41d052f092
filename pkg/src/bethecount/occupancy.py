"""Restricted-occupancy generating functions and their coefficients.

For a chain of ``L`` sites carrying the ``2s``-symmetric representation of
su(r+1), ``c_{s,L}(M)`` counts layered box configurations: ``M_a`` boxes on
layer ``a`` spread over ``L`` rows, each row holding at most ``2s`` boxes on
layer 1 and no more on layer ``a`` than on layer ``a-1``.  It is the
coefficient of ``x^M`` in ``S_(2s)(1, x1, x1 x2, ..., x1...xr) ** L``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

from .errors import SizeGuardError, ValidationError
from .poly import SignedPolynomial, mul, pow

BRUTE_FORCE_LIMIT = 10**7

SUPPORTED_SUPER = {(1, 1), (1, 2)}


@dataclass(frozen=True)
class SpinChainSpec:
    """Rank, doubled spin ``twos = 2s`` and chain length.

    ``superalgebra`` is ``(m, n)`` for sl(m|n) chains; the rank is then the
    number of magnon charges, ``m + n - 1``.
    """
    rank: int
    twos: int
    length: int
    superalgebra: tuple | None = None

    def __post_init__(self):
        for name in ("rank", "twos", "length"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValidationError(f"{name} must be a positive integer, got {value!r}")
        if self.superalgebra is not None:
            sup = tuple(self.superalgebra)
            if sup not in SUPPORTED_SUPER:
                raise ValidationError(f"only sl(1|1) and sl(1|2) are supported, got {sup}")
            if self.rank != sum(sup) - 1:
                raise ValidationError(f"sl{sup} chains carry {sum(sup) - 1} charges, rank={self.rank}")
            object.__setattr__(self, "superalgebra", sup)

    @property
    def size(self) -> int:
        """Number of boxes ``2sL`` of every Young diagram in the tensor power."""
        return self.twos * self.length


def as_magnons(M, r: int) -> tuple[int, ...]:
    if isinstance(M, int):
        M = (M,)
    M = tuple(int(m) for m in M)
    if len(M) != r:
        raise ValidationError(f"expected {r} magnon numbers, got {len(M)}")
    return M


def in_support(M: Sequence[int], top: int) -> bool:
    """``top >= M_1 >= ... >= M_r >= 0``."""
    prev = top
    for m in M:
        if m > prev:
            return False
        prev = m
    return prev >= 0


def iter_magnons(r: int, top: int) -> Iterator[tuple[int, ...]]:
    """All ``top >= M_1 >= ... >= M_r >= 0`` in lexicographic order."""
    def rec(prefix, bound, left):
        if not left:
            yield tuple(prefix)
            return
        for m in range(bound + 1):
            yield from rec(prefix + [m], m, left - 1)
    if r == 0:
        yield ()
        return
    yield from rec([], top, r)


def _columns(r: int, twos: int) -> list[tuple[int, ...]]:
    """Weakly decreasing ``twos >= n_1 >= ... >= n_r >= 0``."""
    return [tuple(reversed(c)) for c in combinations_with_replacement(range(twos + 1), r)]


@lru_cache(maxsize=None)
def site_factor(r: int, twos: int) -> SignedPolynomial:
    """``S_(2s)(1, x1, x1 x2, ..., x1...xr)``: one monomial per column."""
    if r < 1 or twos < 0:
        raise ValidationError("site_factor needs r >= 1 and twos >= 0")
    return SignedPolynomial(r, {c: 1 for c in _columns(r, twos)})


def _h(k: int, r: int) -> SignedPolynomial:
    if k < 0:
        return SignedPolynomial(r)
    return site_factor(r, k)


def _as_partition(lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValidationError(f"{lam} is not a partition")
    return tuple(x for x in lam if x)


@lru_cache(maxsize=None)
def _schur(lam: tuple, r: int) -> SignedPolynomial:
    n = len(lam)
    if n == 0:
        return SignedPolynomial.one(r)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> SignedPolynomial:
        # Laplace expansion of det[h_{lam_i - i + j}] along row `row`
        if row == n:
            return SignedPolynomial.one(r)
        acc = SignedPolynomial(r)
        for pos, j in enumerate(sorted(cols)):
            entry = _h(lam[row] - row + j, r)
            if not entry:
                continue
            term = mul(entry, minor(row + 1, cols - {j}))
            acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(0, frozenset(range(n)))


def schur_specialized(lam: Sequence[int], r: int) -> SignedPolynomial:
    """``S_lam(1, x1, x1 x2, ..., x1...xr)`` via Jacobi-Trudi over specialized ``h_k``."""
    lam = _as_partition(lam)
    if len(lam) > r + 1:
        raise ValidationError(f"{lam} has more than {r + 1} rows")
    return _schur(lam, r)


@lru_cache(maxsize=256)
def generating_function(spec: SpinChainSpec, box: tuple | None = None) -> SignedPolynomial:
    """``site_factor ** L``, optionally truncated to ``box``."""
    return pow(site_factor(spec.rank, spec.twos), spec.length, box)


def c_table(spec: SpinChainSpec) -> dict:
    """All nonzero ``c_{s,L}(M)`` from a single full expansion."""
    return generating_function(spec).terms


def c_coefficient(spec: SpinChainSpec, M) -> int:
    M = as_magnons(M, spec.rank)
    if not in_support(M, spec.size):
        return 0
    return generating_function(spec, M).coefficient(M)


def _guard(spec: SpinChainSpec, ncols: int):
    total = ncols ** spec.length
    if total > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"{total} configurations exceed the brute-force limit {BRUTE_FORCE_LIMIT}")


def brute_force_c(spec: SpinChainSpec, M) -> int:
    """Count occupancy configurations with layer totals ``M`` by enumeration."""
    M = as_magnons(M, spec.rank)
    cols = _columns(spec.rank, spec.twos)
    _guard(spec, len(cols))
    if any(m < 0 for m in M):
        return 0

    def count(site, remaining):
        if site == spec.length:
            return int(not any(remaining))
        if remaining[0] > spec.twos * (spec.length - site):
            return 0
        total = 0
        for col in cols:
            rest = tuple(a - b for a, b in zip(remaining, col))
            if min(rest) >= 0:
                total += count(site + 1, rest)
        return total

    return count(0, M)


def brute_force_table(spec: SpinChainSpec) -> Counter:
    """Tally every occupancy configuration by its layer totals."""
    cols = _columns(spec.rank, spec.twos)
    _guard(spec, len(cols))
    tally: Counter = Counter()

    def walk(site, acc):
        if site == spec.length:
            tally[acc] += 1
            return
        for col in cols:
            walk(site + 1, tuple(a + b for a, b in zip(acc, col)))

    walk(0, (0,) * spec.rank)
    return tally


def mixed_c(diagrams: Sequence[Sequence[int]], r: int, M) -> int:
    """Coefficient of ``x^M`` in the product of per-site specialized Schur polynomials."""
    M = as_magnons(M, r)
    if any(m < 0 for m in M):
        return 0
    acc = SignedPolynomial.one(r).truncate(M)
    for lam in diagrams:
        acc = mul(acc, schur_specialized(lam, r), M)
    return acc.coefficient(M)


def kondo_c(spec_bulk: SpinChainSpec, twos_impurity: int, M) -> int:
    """Chain of ``L`` spin-s sites plus one spin-s' impurity site."""
    M = as_magnons(M, spec_bulk.rank)
    if any(m < 0 for m in M):
        return 0
    impurity = schur_specialized((twos_impurity,), spec_bulk.rank)
    return mul(impurity, generating_function(spec_bulk, M), M).coefficient(M)


def kondo_nested(spec_bulk: SpinChainSpec, twos_impurity: int, M) -> int:
    """The same count as an explicit nested sum over impurity states.

    The summation indices ``j_1..j_r`` obey ``j_1 <= 2s'``,
    ``j_2 <= 2s' - j_1`` and so on; ``j_k`` is the power of the nesting
    variable ``x_1...x_k``, so the impurity shifts ``M_a`` by
    ``j_a + ... + j_r``.
    """
    r = spec_bulk.rank
    M = as_magnons(M, r)
    total = 0

    def rec(js, left):
        nonlocal total
        if len(js) == r:
            shift = [sum(js[a:]) for a in range(r)]
            total += c_coefficient(spec_bulk, tuple(m - s for m, s in zip(M, shift)))
            return
        for j in range(left + 1):
            rec(js + [j], left - j)

    rec([], twos_impurity)
    return total


@lru_cache(maxsize=None)
def _rank1_c(twos: int, L: int, M: int) -> int:
    if L == 0:
        return int(M == 0)
    if not 0 <= M <= twos * L:
        return 0
    return pow(site_factor(1, twos), L, (M,)).coefficient((M,))


def tj_c(twos: int, L: int, M1: int, M2: int) -> int:
    """t-J state count ``C(L, M1) * c_{s,M1}(M2)``."""
    if not (0 <= M1 <= L) or M2 < 0:
        return 0
    return comb(L, M1) * _rank1_c(twos, M1, M2)


def total_states(spec: SpinChainSpec) -> int:
    """Sum of all ``c(M)``: the generating function at ``x = 1``."""
    return site_factor(spec.rank, spec.twos).at_ones() ** spec.length
