"""Tensor-product multiplicities and branching coefficients from occupancy counts.

The multiplicity of the irrep with highest weight ``lambda`` in the ``L``-fold
tensor power is obtained by applying the Weyl-denominator stencil to the
occupancy coefficients ``c_{s,L}``.  Partial twists keep only the preserved
roots in the stencil and label states by one Young diagram per block.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import comb, factorial, prod
from typing import Callable, Sequence

from .characters import CharacterInverse, apply_shift, partial_inverse, verma_inverse
from .errors import ConsistencyError, ValidationError
from .occupancy import (SpinChainSpec, as_magnons, c_table, generating_function,
                        iter_magnons, schur_specialized)
from .poly import SignedPolynomial, mul, series_reciprocal
from .rootsys import SubalgebraDecomposition, positive_roots


def _rows(size: int, M: Sequence[int]) -> tuple[int, ...]:
    if not M:
        return (size,)
    return (size - M[0],) + tuple(a - b for a, b in zip(M, M[1:])) + (M[-1],)


def _is_diagram(rows: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(rows, rows[1:])) and (not rows or rows[-1] >= 0)


def young_from_magnons(spec: SpinChainSpec, M) -> tuple[int, ...] | None:
    """``(2sL - M1, M1 - M2, ..., M_r)``, or ``None`` if it is not a Young diagram."""
    rows = _rows(spec.size, as_magnons(M, spec.rank))
    return rows if _is_diagram(rows) else None


@dataclass(frozen=True)
class BranchedLabel:
    """One Young diagram per block of a decomposition.

    ``components[k]`` lists the rows of ``lambda`` indexed by ``blocks[k]``;
    one-row components label u(1) charges.
    """
    blocks: tuple[tuple[int, ...], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def nonabelian(self) -> list[tuple[int, ...]]:
        return [c for c in self.components if len(c) > 1]

    @property
    def u1_rows(self) -> list[int]:
        return [c[0] for c in self.components if len(c) == 1]


def branch_label(spec: SpinChainSpec, M, decomp: SubalgebraDecomposition) -> BranchedLabel | None:
    if decomp.rank != spec.rank:
        raise ValidationError(f"decomposition rank {decomp.rank} does not match spec rank {spec.rank}")
    rows = _rows(spec.size, as_magnons(M, spec.rank))
    if min(rows) < 0:
        return None
    comps = tuple(tuple(rows[i - 1] for i in blk) for blk in decomp.blocks)
    if not all(_is_diagram(c) for c in comps):
        return None
    return BranchedLabel(decomp.blocks, comps)


def _checked(value: int, where) -> int:
    if value < 0:
        raise ConsistencyError(f"negative multiplicity {value} at {where}")
    return value


def _shift_from_poly(inv: CharacterInverse, g: SignedPolynomial, M) -> int:
    terms = g.terms
    return apply_shift(inv, lambda K: terms.get(K, 0), M)


def mu_untwisted(spec: SpinChainSpec, M) -> int:
    M = as_magnons(M, spec.rank)
    if young_from_magnons(spec, M) is None:
        return 0
    inv = verma_inverse(positive_roots(spec.rank), spec.rank)
    return _checked(_shift_from_poly(inv, generating_function(spec, M), M), M)


def mu_partial(spec: SpinChainSpec, M, decomp: SubalgebraDecomposition) -> int:
    M = as_magnons(M, spec.rank)
    if branch_label(spec, M, decomp) is None:
        return 0
    inv = partial_inverse(decomp)
    return _checked(_shift_from_poly(inv, generating_function(spec, M), M), M)


def hook_length_mu(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` from row hook lengths ``lam_i + n - i``."""
    lam = tuple(lam)
    n = len(lam)
    hooks = [lam[i] + n - 1 - i for i in range(n)]
    num = factorial(sum(lam)) * prod(hooks[i] - hooks[j] for i in range(n) for j in range(i + 1, n))
    den = prod(factorial(h) for h in hooks)
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"hook-length formula is not integral for {lam}")
    return q


def dim_irrep(lam: Sequence[int], r: int | None = None) -> int:
    """Weyl dimension of the su(r+1) irrep with Young diagram ``lam``."""
    lam = list(lam)
    r = len(lam) - 1 if r is None else r
    if len(lam) > r + 1:
        if any(lam[r + 1:]):
            return 0
        lam = lam[:r + 1]
    lam += [0] * (r + 1 - len(lam))
    pairs = [(i, j) for i in range(r + 1) for j in range(i + 1, r + 1)]
    num = prod(lam[i] - lam[j] + j - i for i, j in pairs)
    den = prod(j - i for i, j in pairs)
    return num // den


def dim_branched(label: BranchedLabel) -> int:
    return prod(dim_irrep(c) for c in label.components)


@dataclass
class CompletenessReport:
    total: int
    target: int
    labels: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.total == self.target

    def as_dict(self) -> dict:
        return {"total": str(self.total), "target": str(self.target), "labels": self.labels,
                "pass": self.passed, **self.details}


def _full_inverse(spec, decomp):
    if decomp is None:
        return verma_inverse(positive_roots(spec.rank), spec.rank)
    return partial_inverse(decomp)


def _label(spec, M, decomp):
    if decomp is None:
        lam = young_from_magnons(spec, M)
        return lam, (dim_irrep(lam) if lam is not None else 0)
    lab = branch_label(spec, M, decomp)
    return lab, (dim_branched(lab) if lab is not None else 0)


def completeness_check(spec: SpinChainSpec, decomp: SubalgebraDecomposition | None = None) -> CompletenessReport:
    """``sum_M mu * dim`` against ``C(2s+r, r)**L``; ``decomp=None`` is the untwisted chain."""
    table = c_table(spec)
    inv = _full_inverse(spec, decomp)
    total = labels = 0
    for M in iter_magnons(spec.rank, spec.size):
        lab, dim = _label(spec, M, decomp)
        if lab is None:
            continue
        labels += 1
        mu = _checked(apply_shift(inv, lambda K: table.get(K, 0), M), M)
        total += mu * dim
    target = comb(spec.twos + spec.rank, spec.rank) ** spec.length
    return CompletenessReport(total, target, labels)


def default_charge(decomp: SubalgebraDecomposition | None):
    """u(1) charge convention ``a + b * row`` used for su(3) with only alpha_2 preserved."""
    if decomp is not None and decomp.rank == 2 and decomp.blocks == ((1,), (2, 3)):
        return (4, -3)
    return None


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("BETHECOUNT_THREADS", "1")))
    except ValueError:
        return 1


def mu_table(spec: SpinChainSpec, decomp: SubalgebraDecomposition | None = None,
             charge: tuple | None = None, nonzero: bool = False) -> list[dict]:
    """Rows ``{M, lambda|Lambda, mu, dim}`` for every valid label in the support.

    Integers in ``mu`` and ``dim`` are decimal strings.  ``charge=(a, b)``
    adds ``a + b * row`` for each one-row (u(1)) component.
    """
    table = c_table(spec)
    inv = _full_inverse(spec, decomp)
    points = []
    for M in iter_magnons(spec.rank, spec.size):
        lab, dim = _label(spec, M, decomp)
        if lab is not None:
            points.append((M, lab, dim))

    def evaluate(point):
        M, lab, dim = point
        return _checked(apply_shift(inv, lambda K: table.get(K, 0), M), M)

    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        mus = list(pool.map(evaluate, points))

    rows = []
    for (M, lab, dim), mu in zip(points, mus):
        if nonzero and not mu:
            continue
        row = {"M": list(M)}
        if decomp is None:
            row["lambda"] = list(lab)
        else:
            row["Lambda"] = [list(c) for c in lab.components]
            if charge is not None:
                a, b = charge
                row["charges"] = [a + b * x for x in lab.u1_rows]
        row["mu"] = str(mu)
        row["dim"] = str(dim)
        rows.append(row)
    return rows


def count_table(spec: SpinChainSpec) -> list[dict]:
    table = c_table(spec)
    return [{"M": list(M), "c": str(table.get(M, 0))} for M in iter_magnons(spec.rank, spec.size)]


def mu_from_coefficients(f: Callable, r: int, size: int, M,
                         decomp: SubalgebraDecomposition | None = None) -> int:
    """Stencil applied to an arbitrary coefficient function ``f`` with diagrams of ``size`` boxes."""
    M = as_magnons(M, r)
    rows = _rows(size, M)
    if decomp is None:
        if not _is_diagram(rows):
            return 0
        inv = verma_inverse(positive_roots(r), r)
    else:
        if min(rows) < 0 or not all(_is_diagram([rows[i - 1] for i in b]) for b in decomp.blocks):
            return 0
        inv = partial_inverse(decomp)
    return _checked(apply_shift(inv, f, M), M)


def mixed_generating_function(diagrams: Sequence[Sequence[int]], r: int) -> SignedPolynomial:
    acc = SignedPolynomial.one(r)
    for lam in diagrams:
        acc = mul(acc, schur_specialized(lam, r))
    return acc


def mixed_completeness(diagrams: Sequence[Sequence[int]], r: int) -> CompletenessReport:
    """Completeness for a chain whose sites carry the given irreps."""
    table = mixed_generating_function(diagrams, r).terms
    size = sum(sum(lam) for lam in diagrams)
    total = labels = 0
    for M in iter_magnons(r, size):
        rows = _rows(size, M)
        if not _is_diagram(rows):
            continue
        labels += 1
        total += mu_from_coefficients(lambda K: table.get(K, 0), r, size, M) * dim_irrep(rows)
    target = prod(dim_irrep(lam, r) for lam in diagrams)
    return CompletenessReport(total, target, labels)


def weyl_extension(spec: SpinChainSpec) -> dict:
    """Multiplicities spread over the Weyl orbits: ``mu(w . lam) = sgn(w) mu(lam)``.

    ``w . lam`` is the shifted action ``w(lam + rho) - rho`` on Young-diagram
    rows; the image is keyed by its magnon vector.
    """
    n = spec.rank + 1
    rho = range(n - 1, -1, -1)
    ext: dict = {}
    for row in mu_table(spec, nonzero=True):
        shifted = [a + b for a, b in zip(row["lambda"], rho)]
        for perm in permutations(range(n)):
            sign = -1 if sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n)) % 2 else 1
            rows = [shifted[perm[i]] - rho[i] for i in range(n)]
            M = tuple(spec.size - sum(rows[:a]) for a in range(1, n))
            ext[M] = ext.get(M, 0) + sign * int(row["mu"])
    return {M: v for M, v in ext.items() if v}


def reconstruct_c(spec: SpinChainSpec, M) -> int:
    """Rebuild ``c(M)`` from the multiplicity table by convolving with the character series."""
    M = as_magnons(M, spec.rank)
    if any(m < 0 for m in M):
        return 0
    inv = verma_inverse(positive_roots(spec.rank), spec.rank)
    chi = series_reciprocal(inv.poly, M)
    ext = weyl_extension(spec)
    return apply_shift(CharacterInverse(chi, M), lambda K: ext.get(K, 0), M)
