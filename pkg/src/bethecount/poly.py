"""Sparse multivariate polynomials with exact integer coefficients.

Polynomials map exponent tuples to Python ints.  Every product can be
truncated to a ``box`` (a per-variable maximum exponent); since all
exponents are nonnegative, a term that leaves the box can never come back,
so truncating after each step is the same as truncating once at the end.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import ValidationError

Exponents = tuple  # tuple[int, ...]


def term_order(e: Sequence[int]):
    """Graded order: total degree first, then larger leading exponents first."""
    return (sum(e), tuple(-x for x in e))


def _check_box(box, arity):
    if box is None:
        return None
    box = tuple(int(b) for b in box)
    if len(box) != arity:
        raise ValidationError(f"box has {len(box)} entries, polynomial arity is {arity}")
    if any(b < 0 for b in box):
        raise ValidationError(f"box bounds must be nonnegative, got {box}")
    return box


def _in_box(e, box):
    return all(x <= b for x, b in zip(e, box))


class SignedPolynomial:
    """Immutable sparse polynomial over the integers in ``arity`` variables."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping | Iterable = ()):
        self.arity = arity
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != arity:
                raise ValidationError(f"exponent {e} does not match arity {arity}")
            if any(x < 0 for x in e):
                raise ValidationError(f"negative exponent in {e}")
            out[e] = out.get(e, 0) + int(c)
        self._terms = {e: c for e, c in out.items() if c}

    @classmethod
    def one(cls, arity: int) -> "SignedPolynomial":
        return cls(arity, {(0,) * arity: 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: int = 1) -> "SignedPolynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded) order."""
        return sorted(self._terms.items(), key=lambda kv: term_order(kv[0]))

    def coefficient(self, e: Sequence[int]) -> int:
        e = tuple(e)
        if len(e) != self.arity:
            raise ValidationError(f"exponent {e} does not match arity {self.arity}")
        return self._terms.get(e, 0)

    def truncate(self, box) -> "SignedPolynomial":
        box = _check_box(box, self.arity)
        return SignedPolynomial(self.arity, {e: c for e, c in self._terms.items() if _in_box(e, box)})

    def at_ones(self) -> int:
        return sum(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SignedPolynomial(self.arity, {(0,) * self.arity: other})
        if not isinstance(other, SignedPolynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __neg__(self):
        return SignedPolynomial(self.arity, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, k):
        return pow(self, k)

    def __repr__(self):
        return f"SignedPolynomial({self.format()})"

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["t"] if self.arity == 1 else [f"t{i + 1}" for i in range(self.arity)]
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: list, arity: int | None = None) -> "SignedPolynomial":
        if arity is None:
            if not data:
                raise ValidationError("arity is required for an empty term list")
            arity = len(data[0]["exponents"])
        return cls(arity, ((t["exponents"], int(t["coeff"])) for t in data))


def _check_arity(a, b):
    if a.arity != b.arity:
        raise ValidationError(f"arity mismatch: {a.arity} vs {b.arity}")


def add(a: SignedPolynomial, b: SignedPolynomial) -> SignedPolynomial:
    if isinstance(b, int):
        b = SignedPolynomial(a.arity, {(0,) * a.arity: b})
    _check_arity(a, b)
    out = dict(a._terms)
    for e, c in b._terms.items():
        out[e] = out.get(e, 0) + c
    return SignedPolynomial(a.arity, out)


def mul(a: SignedPolynomial, b: SignedPolynomial, box=None) -> SignedPolynomial:
    if isinstance(b, int):
        b = SignedPolynomial(a.arity, {(0,) * a.arity: b})
    _check_arity(a, b)
    box = _check_box(box, a.arity)
    ta, tb = a._terms, b._terms
    if box is not None:
        ta = {e: c for e, c in ta.items() if _in_box(e, box)}
        tb = {e: c for e, c in tb.items() if _in_box(e, box)}
    if len(ta) > len(tb):
        ta, tb = tb, ta
    out: dict = {}
    get = out.get
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if box is not None and not _in_box(e, box):
                continue
            out[e] = get(e, 0) + ca * cb
    res = SignedPolynomial.__new__(SignedPolynomial)
    res.arity = a.arity
    res._terms = {e: c for e, c in out.items() if c}
    return res


def pow(a: SignedPolynomial, k: int, box=None) -> SignedPolynomial:
    """``a**k`` by repeated squaring, truncating to ``box`` at every step."""
    if k < 0:
        raise ValidationError("negative powers are not polynomials; use series_reciprocal")
    box = _check_box(box, a.arity)
    result = SignedPolynomial.one(a.arity)
    if box is not None:
        result = result.truncate(box)
    base = a if box is None else a.truncate(box)
    while k:
        if k & 1:
            result = mul(result, base, box)
        k >>= 1
        if k:
            base = mul(base, base, box)
    return result


def series_reciprocal(a: SignedPolynomial, box) -> SignedPolynomial:
    """Power series inverse of ``a`` truncated to ``box``.

    The constant term must be a unit (+1 or -1).  Uses Newton steps
    ``p <- p (2 - a p)``, each of which doubles the number of correct
    graded orders, until ``a p == 1`` inside the box.
    """
    box = _check_box(box, a.arity)
    if box is None:
        raise ValidationError("series_reciprocal needs a truncation box")
    c0 = a.coefficient((0,) * a.arity)
    if c0 not in (1, -1):
        raise ValidationError(f"constant term must be +1 or -1, got {c0}")
    one = SignedPolynomial.one(a.arity)
    p = SignedPolynomial(a.arity, {(0,) * a.arity: c0})
    for _ in range(sum(box).bit_length() + 2):
        ap = mul(a, p, box)
        if ap == one:
            return p
        p = mul(p, add(one + one, -ap), box)
    if mul(a, p, box) != one:  # pragma: no cover - Newton converges in log2 steps
        raise AssertionError("series_reciprocal did not converge")
    return p


def coefficient(a: SignedPolynomial, e: Sequence[int]) -> int:
    return a.coefficient(e)
