"""Root data for A_r and sl(m|n), twist-angle symmetry detection and
the root-subset decompositions used by partial twists.

A-type positive roots are stored as index intervals ``(lo, hi)`` meaning
``e_lo - e_hi = alpha_lo + ... + alpha_{hi-1}``.  Indices are 1-based
throughout to match the usual row numbering of Young diagrams.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class PositiveRoot:
    lo: int
    hi: int

    def __post_init__(self):
        if not (1 <= self.lo < self.hi):
            raise ValidationError(f"invalid positive root ({self.lo}, {self.hi})")

    def exponents(self, rank: int) -> tuple[int, ...]:
        """Coefficients of the root in the simple-root basis."""
        if self.hi > rank + 1:
            raise ValidationError(f"root {self} does not fit rank {rank}")
        return tuple(1 if self.lo <= i < self.hi else 0 for i in range(1, rank + 1))

    @property
    def name(self) -> str:
        return "+".join(f"a{i}" for i in range(self.lo, self.hi))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class SuperPositiveRoot:
    kind: str  # "even" or "odd"
    left: str
    right: str
    exponents: tuple[int, ...]

    def __str__(self):
        return f"{self.left}-{self.right}"


def positive_roots(r: int) -> list[PositiveRoot]:
    return [PositiveRoot(lo, hi) for lo in range(1, r + 1) for hi in range(lo + 1, r + 2)]


def simple_roots(r: int) -> list[PositiveRoot]:
    return [PositiveRoot(i, i + 1) for i in range(1, r + 1)]


_TERM = re.compile(r"^\s*([a-zA-Z]+)\s*(\d+)\s*$")


def _parse_interval(text: str, prefix: str) -> PositiveRoot:
    idx = []
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m or m.group(1).lower() not in prefix:
            raise ValidationError(f"cannot parse {text!r}")
        idx.append(int(m.group(2)))
    idx.sort()
    if len(set(idx)) != len(idx) or idx != list(range(idx[0], idx[-1] + 1)):
        raise ValidationError(f"{text!r} is not a contiguous sum of simple roots")
    return PositiveRoot(idx[0], idx[-1] + 1)


def parse_root(text: str, r: int | None = None) -> PositiveRoot:
    """Parse ``"a2"`` or ``"a1+a2"`` into a :class:`PositiveRoot`."""
    root = _parse_interval(text, ("a", "alpha"))
    if r is not None:
        root.exponents(r)
    return root


def parse_root_list(text: str, r: int | None = None) -> list[PositiveRoot]:
    return [parse_root(t, r) for t in text.split(",") if t.strip()]


def super_positive_roots(m: int, n: int) -> list[SuperPositiveRoot]:
    """Positive roots of sl(m|n) for the distinguished simple-root system.

    Exponent vectors are over ``(alpha_1..alpha_{m-1}, beta_1..beta_{n-1},
    delta)`` so that the last formal variable always belongs to the odd
    simple root.
    """
    if m < 1 or n < 1:
        raise ValidationError("sl(m|n) needs m >= 1 and n >= 1")
    arity = m + n - 1

    def vec(alphas=(), betas=(), delta=0):
        v = [0] * arity
        for i in alphas:
            v[i - 1] = 1
        for l in betas:
            v[m - 1 + l - 1] = 1
        v[-1] = delta
        return tuple(v)

    roots = []
    for i, j in combinations(range(1, m + 1), 2):
        roots.append(SuperPositiveRoot("even", f"e{i}", f"e{j}", vec(alphas=range(i, j))))
    for k, l in combinations(range(1, n + 1), 2):
        roots.append(SuperPositiveRoot("even", f"f{k}", f"f{l}", vec(betas=range(k, l))))
    for i in range(1, m + 1):
        for k in range(1, n + 1):
            roots.append(SuperPositiveRoot(
                "odd", f"e{i}", f"f{k}", vec(alphas=range(i, m), betas=range(1, k), delta=1)))
    return roots


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _blocks(r: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    uf = _UnionFind(r + 1)
    for a, b in pairs:
        uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(1, r + 2):
        groups.setdefault(uf.find(i), []).append(i)
    return tuple(sorted(tuple(g) for g in groups.values()))


@dataclass(frozen=True)
class SubalgebraDecomposition:
    """Unbroken subalgebra of su(r+1) as a partition of row indices.

    Each block of size k+1 carries an A_k summand; the remaining Cartan
    directions are u(1) factors.  Blocks keep their indices in ascending
    order, which is the order rows are glued in by the branching rule.
    """
    rank: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def preserved_roots(self) -> list[PositiveRoot]:
        return sorted(PositiveRoot(a, b) for blk in self.blocks for a, b in combinations(blk, 2))

    @property
    def summand_ranks(self) -> list[int]:
        return sorted((len(b) - 1 for b in self.blocks if len(b) > 1), reverse=True)

    @property
    def n_u1(self) -> int:
        return self.rank - sum(self.summand_ranks)

    def describe(self) -> str:
        parts = [f"su({k + 1})" for k in self.summand_ranks]
        if self.n_u1 == 1:
            parts.append("u(1)")
        elif self.n_u1 > 1:
            parts.append(f"u(1)^{self.n_u1}")
        return "+".join(parts) if parts else "trivial"

    @classmethod
    def full(cls, r: int) -> "SubalgebraDecomposition":
        return cls(r, (tuple(range(1, r + 2)),))

    @classmethod
    def trivial(cls, r: int) -> "SubalgebraDecomposition":
        return cls(r, tuple((i,) for i in range(1, r + 2)))


def decomposition_from_subset(r: int, dplus: Iterable[PositiveRoot]) -> SubalgebraDecomposition:
    """Smallest decomposition whose preserved roots contain ``dplus``."""
    dplus = list(dplus)
    for root in dplus:
        root.exponents(r)
    return SubalgebraDecomposition(r, _blocks(r, ((a.lo, a.hi) for a in dplus)))


@dataclass(frozen=True)
class TwistConfiguration:
    """Which positive roots carry a vanishing total twist.

    ``zero_roots`` holds ``(lo, hi)`` for every root with
    ``theta_lo + ... + theta_{hi-1} = 0 (mod 2 pi)``.  Use one of the
    constructors; they all return a transitively closed set.
    """
    rank: int
    zero_roots: frozenset

    @classmethod
    def from_angles(cls, angles: Sequence) -> "TwistConfiguration":
        """Angles are given as exact rationals in units of 2 pi."""
        angles = [Fraction(a) for a in angles]
        r = len(angles)
        zeros = set()
        for lo in range(1, r + 1):
            total = Fraction(0)
            for hi in range(lo + 1, r + 2):
                total += angles[hi - 2]
                if total.denominator == 1:
                    zeros.add((lo, hi))
        return cls(r, frozenset(zeros))

    @classmethod
    def from_zeros(cls, r: int, combos: Iterable) -> "TwistConfiguration":
        """Build from a list of vanishing combinations such as ``"t2+t3"``.

        Entries may be strings or :class:`PositiveRoot`.  The implied
        vanishing relations are closed under transitivity.
        """
        roots = []
        for c in combos:
            if isinstance(c, PositiveRoot):
                c.exponents(r)
                roots.append(c)
            else:
                root = _parse_interval(c, ("t", "theta"))
                root.exponents(r)
                roots.append(root)
        decomp = decomposition_from_subset(r, roots)
        return cls(r, frozenset((a.lo, a.hi) for a in decomp.preserved_roots))

    @classmethod
    def from_flags(cls, r: int, flags: Mapping) -> "TwistConfiguration":
        """Explicit per-root zero flags; rejected unless consistent with some angles."""
        zeros = set()
        for key, flag in flags.items():
            root = key if isinstance(key, PositiveRoot) else PositiveRoot(*key)
            root.exponents(r)
            if flag:
                zeros.add((root.lo, root.hi))
        closed = cls.from_zeros(r, [PositiveRoot(*z) for z in zeros])
        if closed.zero_roots != frozenset(zeros):
            missing = sorted(closed.zero_roots - zeros)
            raise ValidationError(f"zero pattern is not transitive; implied but unflagged: {missing}")
        return closed


def parse_zeros(text: str, r: int) -> TwistConfiguration:
    return TwistConfiguration.from_zeros(r, [t for t in text.split(",") if t.strip()])


def preserved_roots(r: int, twists: TwistConfiguration) -> SubalgebraDecomposition:
    if twists.rank != r:
        raise ValidationError(f"twist configuration has rank {twists.rank}, expected {r}")
    return SubalgebraDecomposition(r, _blocks(r, twists.zero_roots))
