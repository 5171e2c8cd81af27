"""Symmetric groups as concrete permutation groups.

Permutations are tuples in one-line notation on 0..n-1; composition is
(p*q)(x) = p(q(x)).  The ql-data families only ever need S_n for small
n, so groups are materialized as full element lists with lexicographic
ordering, which makes every enumeration in the package deterministic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Perm = tuple


def pmul(p: Perm, q: Perm) -> Perm:
    return tuple(p[q[x]] for x in range(len(p)))


def pinv(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def pidentity(n: int) -> Perm:
    return tuple(range(n))


def psign(p: Perm) -> int:
    seen = [False] * len(p)
    sign = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def transposition(n: int, a: int, b: int) -> Perm:
    """The transposition (a b) on 0..n-1."""
    out = list(range(n))
    out[a], out[b] = b, a
    return tuple(out)


def cycle_notation(p: Perm) -> str:
    """One-based cycle notation, "e" for the identity."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = p[x]
        parts.append("(" + "".join(str(c) for c in cyc) + ")")
    return "".join(parts) if parts else "e"


class SymmetricGroup:
    """S_n with a fixed lexicographic element order and index lookup."""

    def __init__(self, n: int):
        self.n = n
        self.elements: list[Perm] = list(itertools.permutations(range(n)))
        self.index: dict[Perm, int] = {p: k for k, p in enumerate(self.elements)}
        # adjacent transpositions generate; modules store matrices for these
        self.gens: list[int] = [
            self.index[transposition(n, k, k + 1)] for k in range(n - 1)
        ]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return self.index[pidentity(self.n)]

    def mul(self, a: int, b: int) -> int:
        return self.index[pmul(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        return self.index[pinv(self.elements[a])]

    def sign(self, a: int) -> int:
        return psign(self.elements[a])

    def label(self, a: int) -> str:
        return cycle_notation(self.elements[a])

    def factor_words(self, gens: list[int] | None = None) -> list[list[int]]:
        """For each element, a shortest word in the given generators
        (group element indices), found by BFS from the identity."""
        gens = self.gens if gens is None else gens
        words: list[list[int] | None] = [None] * self.order
        words[self.identity] = []
        frontier = [self.identity]
        while frontier:
            nxt = []
            for t in frontier:
                for g in gens:
                    u = self.mul(g, t)
                    if words[u] is None:
                        words[u] = [g] + words[t]  # u = g * t
                        nxt.append(u)
            frontier = nxt
        if any(w is None for w in words):
            raise ValueError("generators do not generate the group")
        return words  # type: ignore[return-value]

    def word_lengths(self, gens: list[int]) -> list[int]:
        return [len(w) for w in self.factor_words(gens)]


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


def s3_character_table():
    """Irreducible characters of S_3 as (name, dim, value-on-element-fn).

    The standard character is computed from fixed points of the natural
    action: chi_st(s) = fix(s) - 1.
    """
    def eps(p: Perm) -> int:
        return 1

    def sg(p: Perm) -> int:
        return psign(p)

    def st(p: Perm) -> int:
        return sum(1 for x, y in enumerate(p) if x == y) - 1

    return [("eps", 1, eps), ("sg", 1, sg), ("st", 2, st)]
