"""Weyl denominators, super-denominators and the shift operators they define.

A character inverse ``P(t) = sum_beta w_beta t^beta`` acts on a function of
magnon numbers as ``(D_P f)(M) = sum_beta w_beta f(M - beta)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import ValidationError
from .poly import SignedPolynomial, mul, series_reciprocal
from .rootsys import PositiveRoot, SubalgebraDecomposition, super_positive_roots


@dataclass(frozen=True)
class CharacterInverse:
    """Reciprocal character as a polynomial, or as a series truncated to ``box``."""
    poly: SignedPolynomial
    box: tuple | None = None

    @property
    def arity(self) -> int:
        return self.poly.arity

    @property
    def stencil(self) -> list[tuple[tuple[int, ...], int]]:
        return self.poly.items()


@lru_cache(maxsize=None)
def _denominator(exps: frozenset, arity: int) -> SignedPolynomial:
    acc = SignedPolynomial.one(arity)
    for e in sorted(exps):
        acc = mul(acc, SignedPolynomial(arity, {(0,) * arity: 1, e: -1}))
    return acc


def verma_inverse(roots: Iterable[PositiveRoot], arity: int) -> CharacterInverse:
    """``prod (1 - t^alpha)`` over the given A-type roots."""
    exps = frozenset(root.exponents(arity) for root in roots)
    return CharacterInverse(_denominator(exps, arity))


def partial_inverse(decomp: SubalgebraDecomposition, arity: int | None = None) -> CharacterInverse:
    return verma_inverse(decomp.preserved_roots, decomp.rank if arity is None else arity)


def super_inverse(m: int, n: int, box) -> CharacterInverse:
    """``prod_even (1 - t^alpha) / prod_odd (1 + t^alpha)`` expanded inside ``box``."""
    roots = super_positive_roots(m, n)
    arity = m + n - 1
    box = tuple(int(b) for b in box)
    if len(box) != arity or min(box) < 0:
        raise ValidationError(f"invalid box {box} for sl({m}|{n})")
    one = SignedPolynomial.one(arity)
    even, odd = one, one
    for root in roots:
        factor = SignedPolynomial(arity, {(0,) * arity: 1, root.exponents: 1 if root.kind == "odd" else -1})
        if root.kind == "odd":
            odd = mul(odd, factor, box)
        else:
            even = mul(even, factor, box)
    return CharacterInverse(mul(even, series_reciprocal(odd, box), box), box)


def super_character(m: int, n: int, box) -> SignedPolynomial:
    """``prod_odd (1 + t^alpha) / prod_even (1 - t^alpha)`` expanded inside ``box``."""
    arity = m + n - 1
    one = SignedPolynomial.one(arity)
    num, den = one, one
    for root in super_positive_roots(m, n):
        if root.kind == "odd":
            num = mul(num, SignedPolynomial(arity, {(0,) * arity: 1, root.exponents: 1}), box)
        else:
            den = mul(den, SignedPolynomial(arity, {(0,) * arity: 1, root.exponents: -1}), box)
    return mul(num, series_reciprocal(den, box), box)


def apply_shift(inv: CharacterInverse, f: Callable, M: Sequence[int]) -> int:
    M = tuple(M)
    if len(M) != inv.arity:
        raise ValidationError(f"stencil arity {inv.arity} does not match {len(M)} magnon numbers")
    if inv.box is not None and any(m > b for m, b in zip(M, inv.box)):
        raise ValidationError(f"series truncated to {inv.box} cannot be applied at {M}")
    return sum(w * f(tuple(m - b for m, b in zip(M, beta))) for beta, w in inv.stencil)


def explain(inv: CharacterInverse, fname: str = "c", names: Sequence[str] | None = None) -> str:
    """Render the stencil as a signed difference formula, e.g. ``c(M1,M2) - c(M1-1,M2)``."""
    if names is None:
        names = ["M"] if inv.arity == 1 else [f"M{i + 1}" for i in range(inv.arity)]
    pieces = []
    for beta, w in inv.stencil:
        args = ",".join(n if b == 0 else f"{n}-{b}" for n, b in zip(names, beta))
        mag = abs(w)
        body = f"{fname}({args})" if mag == 1 else f"{mag}*{fname}({args})"
        pieces.append(("-" if w < 0 else "+", body))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
