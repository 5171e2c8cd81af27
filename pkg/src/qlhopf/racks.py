"""Racks, 2-cocycles and the quadratic class combinatorics.

The square X x X is partitioned by the orbit relation generated by
(i,j) ~ (i>j, i); each class C carries a cycle i_1, i_2, ... with
i_{h+2} = i_{h+1} > i_h, coefficient sequences eta_h and zeta_h, and a
distinguished subset R' (cocycle product over the class equal to
(-1)^{n(C)}) indexing the quadratic relations of the lifting algebra.
Class cycles always start at the lexicographically smallest pair so
every table in the package is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Perm, transposition
from .scalars import GQ, MINUS_ONE, ONE


@dataclass(frozen=True)
class Rack:
    """Finite rack on indices 0..n-1 with an optional label registry."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[i][j] = i > j

    @property
    def size(self) -> int:
        return len(self.labels)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def check(self) -> list[str]:
        """Rack/quandle axioms; returns a list of violations."""
        n = self.size
        bad = []
        for i in range(n):
            if sorted(self.table[i]) != list(range(n)):
                bad.append(f"row {i} of the rack table is not a bijection")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.op(i, self.op(j, k)) != self.op(self.op(i, j), self.op(i, k)):
                        bad.append(f"self-distributivity fails at ({i},{j},{k})")
        for i in range(n):
            if self.op(i, i) != i:
                bad.append(f"quandle axiom fails at {i}")
        return bad


@dataclass(frozen=True)
class Cocycle2:
    """2-cocycle q: X x X -> k*, values[i][j] = q_{ij}."""

    values: tuple[tuple[GQ, ...], ...]

    def q(self, i: int, j: int) -> GQ:
        return self.values[i][j]

    def check(self, rack: Rack) -> list[str]:
        n = rack.size
        bad = []
        for i in range(n):
            for j in range(n):
                if not self.values[i][j]:
                    bad.append(f"cocycle value q[{i}][{j}] is zero")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.q(i, rack.op(j, k)) * self.q(j, k)
                    rhs = self.q(rack.op(i, j), rack.op(i, k)) * self.q(i, k)
                    if lhs != rhs:
                        bad.append(f"cocycle identity fails at ({i},{j},{k})")
        return bad


@dataclass(frozen=True)
class ClassData:
    """One orbit of (i,j) -> (i>j, i) with its coefficient data.

    pairs[h-1] = (i_{h+1}, i_h) for h = 1..n; i_seq holds i_1..i_{n+2}
    (the sequence is periodic with period n).  eta[h-1] = eta_h,
    zeta[h-1] = zeta_h for h = 1..n+1.
    """

    index: int
    pairs: tuple[tuple[int, int], ...]
    i_seq: tuple[int, ...]
    eta: tuple[GQ, ...]
    zeta: tuple[GQ, ...]
    in_rprime: bool
    cocycle_product: GQ
    rhs_group_element: int | None = None  # index of g_{i_2} g_{i_1} when known

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def rep(self) -> tuple[int, int]:
        return self.pairs[0]

    def position(self, pair: tuple[int, int]) -> int:
        """1-based position h of the pair (i_{h+1}, i_h) in the cycle."""
        return self.pairs.index(pair) + 1


def transposition_rack(n: int) -> Rack:
    """Conjugation rack on the transpositions of S_n, ordered lexicographically."""
    if n < 3:
        raise ValueError("transposition rack needs n >= 3")
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    index = {p: k for k, p in enumerate(pairs)}
    table = []
    for a, b in pairs:
        row = []
        for c, d in pairs:
            # conjugate (c d) by (a b): relabel entries through the transposition
            swap = {a: b, b: a}
            u, v = swap.get(c, c), swap.get(d, d)
            row.append(index[(min(u, v), max(u, v))])
        table.append(tuple(row))
    labels = tuple(f"({a + 1}{b + 1})" for a, b in pairs)
    return Rack(labels, tuple(table))


def rack_transposition_perms(n: int) -> list[Perm]:
    """Group elements underlying transposition_rack(n), in rack order."""
    return [
        transposition(n, a, b) for a in range(n) for b in range(a + 1, n)
    ]


def constant_cocycle(rack: Rack, value: GQ) -> Cocycle2:
    row = tuple([value] * rack.size)
    return Cocycle2(tuple([row] * rack.size))


def ms_cocycle(n: int) -> Cocycle2:
    """The inversion-counting cocycle on transpositions: for tau=(ij), i<j,
    chi(sigma, tau) = +1 if sigma(i) < sigma(j) and -1 otherwise."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    perms = rack_transposition_perms(n)
    values = []
    for sigma in perms:
        row = []
        for (i, j) in pairs:
            row.append(ONE if sigma[i] < sigma[j] else MINUS_ONE)
        values.append(tuple(row))
    return Cocycle2(tuple(values))


def enumerate_classes(rack: Rack, cocycle: Cocycle2) -> list[ClassData]:
    """Partition X x X into orbit classes with all coefficient data.

    Classes are emitted in lexicographic order of their smallest pair,
    and each cycle starts at that pair.
    """
    n = rack.size
    succ = {}
    for i in range(n):
        for j in range(n):
            succ[(i, j)] = (rack.op(i, j), i)
    seen: set[tuple[int, int]] = set()
    classes: list[ClassData] = []
    for start in sorted(succ):
        if start in seen:
            continue
        cycle = [start]
        cur = succ[start]
        while cur != start:
            cycle.append(cur)
            cur = succ[cur]
        smallest = min(cycle)
        k = cycle.index(smallest)
        cycle = cycle[k:] + cycle[:k]
        seen.update(cycle)
        classes.append(_class_data(len(classes), cycle, cocycle))
    return classes


def _class_data(index: int, cycle: list[tuple[int, int]], cocycle: Cocycle2) -> ClassData:
    size = len(cycle)
    # pairs[h-1] = (i_{h+1}, i_h); recover i_1..i_{n+2} by periodicity
    i_seq = [cycle[0][1]] + [p[0] for p in cycle]  # i_1, i_2, ..., i_{n+1}
    i_seq.append(i_seq[1])  # i_{n+2} = i_2
    assert i_seq[size] == i_seq[0]  # the cycle closes

    def q_step(h: int) -> GQ:
        # q_{i_{h+1}, i_h} with 1-based h; i_seq[h] = i_{h+1} (0-indexed)
        return cocycle.q(i_seq[h], i_seq[h - 1])

    eta: list[GQ] = [ONE]
    acc = ONE
    for h in range(2, size + 2):
        acc = acc * q_step(h - 1)
        sign = ONE if (h + 1) % 2 == 0 else MINUS_ONE
        eta.append(sign * acc)

    zeta: list[GQ] = []
    for h in range(1, size + 2):
        if h % 2 == 0:
            terms = h // 2 - 1
            sign = ONE if terms % 2 == 0 else MINUS_ONE
        else:
            terms = (h - 1) // 2
            sign = ONE if terms % 2 == 0 else MINUS_ONE
        prod = sign
        for l in range(1, terms + 1):
            prod = prod * q_step(h - 2 * l)
        zeta.append(prod)

    total = ONE
    for h in range(1, size + 1):
        total = total * q_step(h)
    expected = ONE if size % 2 == 0 else MINUS_ONE
    return ClassData(
        index=index,
        pairs=tuple(cycle),
        i_seq=tuple(i_seq),
        eta=tuple(eta),
        zeta=tuple(zeta),
        in_rprime=(total == expected),
        cocycle_product=total,
    )


def alpha_beta(c: ClassData, j: int, chi_j_gj: GQ) -> tuple[GQ, GQ]:
    """The geometric sums alpha_j(C), beta_j(C) truncated at floor(n/2)-1
    resp. floor((n+1)/2)-1; empty sums are 0 (singleton classes)."""
    if not any(j in p for p in c.pairs):
        raise ValueError(f"element {j} does not occur in class {c.index}")
    n = c.size

    def geom(upper: int) -> GQ:
        s = GQ(0)
        p = ONE
        for _ in range(upper):
            s = s + p
            p = p * chi_j_gj
        return s

    return geom(n // 2), geom((n + 1) // 2)
