"""Independent multiplicity oracle by character peeling.

The weight multiplicities of the tensor power are tallied by enumerating
occupancy configurations directly.  Irreducible characters are then
subtracted from the top weight down; whatever remains at a dominant weight
when it is reached is that weight's multiplicity.
"""
from __future__ import annotations

from functools import lru_cache

from .counting import _is_diagram, _rows
from .errors import ConsistencyError, SizeGuardError
from .occupancy import SpinChainSpec, as_magnons, brute_force_table, iter_magnons, schur_specialized

WEIGHT_LIMIT = 200_000


@lru_cache(maxsize=64)
def peel(spec: SpinChainSpec) -> dict:
    """Multiplicity of every dominant weight, keyed by magnon vector."""
    points = list(iter_magnons(spec.rank, spec.size))
    if len(points) > WEIGHT_LIMIT:
        raise SizeGuardError(f"{len(points)} weights exceed the peeling limit {WEIGHT_LIMIT}")
    residual = dict(brute_force_table(spec))
    result = {}
    for M in points:
        lam = _rows(spec.size, M)
        if not _is_diagram(lam):
            continue
        m = residual.get(M, 0)
        if m < 0:
            raise ConsistencyError(f"negative residual {m} at M={M}")
        result[M] = m
        if not m:
            continue
        # S_lam(1, x1, x1 x2, ...) has its highest weight at x^M
        for K, c in schur_specialized(lam, spec.rank).terms.items():
            residual[K] = residual.get(K, 0) - m * c
    leftover = {K: v for K, v in residual.items() if v}
    if leftover:
        raise ConsistencyError(f"peeling left nonzero residual at {sorted(leftover)[:5]}")
    return result


def mu_oracle(spec: SpinChainSpec, M) -> int:
    return peel(spec).get(as_magnons(M, spec.rank), 0)
