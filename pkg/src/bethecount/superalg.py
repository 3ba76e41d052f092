"""Multiplicities for sl(1|1) and sl(1|2) chains.

The reciprocal super-character is an infinite series, but the coefficient
functions vanish for negative arguments, so only the part inside the box
``[0, M]`` contributes.  Outputs beyond spin 1/2 are experimental.
"""
from __future__ import annotations

from math import comb, factorial

from .characters import apply_shift, super_inverse
from .counting import CompletenessReport
from .errors import ConsistencyError, ValidationError
from .occupancy import _rank1_c, tj_c

KINDS = {"sl(1|1)": (1, 1), "sl(1|2)": (1, 2), (1, 1): (1, 1), (1, 2): (1, 2)}


def _kind(kind) -> tuple[int, int]:
    try:
        return KINDS[kind if isinstance(kind, str) else tuple(kind)]
    except KeyError:
        raise ValidationError(f"unsupported superalgebra {kind!r}") from None


def _magnons(mn, M):
    if isinstance(M, int):
        M = (M,)
    M = tuple(int(x) for x in M)
    if len(M) != sum(mn) - 1:
        raise ValidationError(f"sl{mn} takes {sum(mn) - 1} magnon numbers, got {len(M)}")
    return M


def is_highest_weight(kind, twos: int, L: int, M) -> bool:
    """Charges that label a module: ``0 <= M < 2sL`` for sl(1|1); for sl(1|2)
    either ``M = (0, 0)`` or ``1 <= M1 <= L``, ``M2 >= 0`` with ``L - 2 M1 + M2 >= 0``."""
    mn = _kind(kind)
    M = _magnons(mn, M)
    if mn == (1, 1):
        return 0 <= M[0] < twos * L
    M1, M2 = M
    if (M1, M2) == (0, 0):
        return True
    return 1 <= M1 <= L and M2 >= 0 and L - 2 * M1 + M2 >= 0


def coefficient_function(kind, twos: int, L: int):
    mn = _kind(kind)
    if mn == (1, 1):
        return lambda K: _rank1_c(twos, L, K[0]) if K[0] >= 0 else 0
    return lambda K: tj_c(twos, L, K[0], K[1])


def mu_super(kind, twos: int, L: int, M) -> int:
    mn = _kind(kind)
    M = _magnons(mn, M)
    if not is_highest_weight(mn, twos, L, M):
        return 0
    inv = super_inverse(*mn, box=M)
    value = apply_shift(inv, coefficient_function(mn, twos, L), M)
    if value < 0:
        raise ConsistencyError(f"negative sl{mn} multiplicity {value} at M={M}")
    return value


def dim_super(kind, L: int, M) -> int:
    mn = _kind(kind)
    M = _magnons(mn, M)
    if mn == (1, 1):
        return 2
    M1, M2 = M
    if M1 == M2 == 0:
        return 2 * L + 1
    return 4 * (L - 2 * M1 + M2 + 1)


def iter_super_magnons(kind, twos: int, L: int):
    mn = _kind(kind)
    if mn == (1, 1):
        for M in range(twos * L):
            yield (M,)
        return
    for M1 in range(L + 1):
        for M2 in range(twos * M1 + 1):
            if is_highest_weight(mn, twos, L, (M1, M2)):
                yield (M1, M2)


def super_completeness(kind, twos: int, L: int) -> CompletenessReport:
    """``sum mu * dim`` against the local dimension to the power ``L``
    (``2**L`` for sl(1|1) and ``3**L`` for sl(1|2) at spin 1/2)."""
    mn = _kind(kind)
    target = (twos + 1) ** L if mn == (1, 1) else (twos + 2) ** L
    total = labels = 0
    details = {"experimental": twos != 1}
    try:
        for M in iter_super_magnons(mn, twos, L):
            labels += 1
            total += mu_super(mn, twos, L, M) * dim_super(mn, L, M)
    except ConsistencyError as exc:
        details["error"] = str(exc)
        total = None
    return CompletenessReport(total, target, labels, details)


def sl11_closed_form(L: int, M: int) -> int:
    """Spin-1/2 sl(1|1) multiplicity ``C(L-1, M)``."""
    return comb(L - 1, M) if 0 <= M <= L - 1 else 0


def tj_closed_form(L: int, M1: int, M2: int) -> int:
    """Spin-1/2 sl(1|2) multiplicity from the factorial closed form."""
    if (M1, M2) == (0, 0):
        return 1
    if not (1 <= M1 <= L and 0 <= M2 <= M1 - 1) or L - 2 * M1 + M2 < 0:
        return 0
    num = factorial(L) * (L - 2 * M1 + M2 + 1)
    den = M1 * factorial(M2) * factorial(L - M1) * factorial(M1 - M2 - 1) * (L - M1 + M2 + 1)
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"t-J closed form not integral at L={L}, M=({M1},{M2})")
    return q
