"""Partitions, multipartitions and their ell-residue combinatorics.

A node ``(a, b, c)`` sits in column ``a`` of row ``b`` of component ``c``
(components are numbered from 1).  Its residue is ``a - b + s_c mod ell``,
which is the convention under which adding a node moves a bead one step
right on the abacus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .lattice import (
    Context,
    Multicharge,
    RootVector,
    WeightVector,
    cartan_pair,
)


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts of {list(parts)} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def part(self, b: int) -> int:
        return self.parts[b] if 0 <= b < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > a) for a in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield ``(a, b)`` = (column, row) for every box."""
        for b, p in enumerate(self.parts):
            for a in range(p):
                yield a, b

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate()
        return [self.parts[b] - a + conj.part(a) - b - 1 for a, b in self.cells()]

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


EMPTY = Partition()


def partition_new(parts: Sequence[int]) -> Partition:
    return Partition(tuple(parts))


@dataclass(frozen=True)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "components",
            tuple(c if isinstance(c, Partition) else Partition(tuple(c)) for c in self.components),
        )

    @classmethod
    def empty(cls, r: int) -> Multipartition:
        return cls((EMPTY,) * r)

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def __getitem__(self, c: int) -> Partition:
        return self.components[c]

    def __iter__(self):
        return iter(self.components)

    def to_json(self) -> list[list[int]]:
        return [list(c.parts) for c in self.components]

    @classmethod
    def from_json(cls, data) -> Multipartition:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
            raise ValueError(f"expected a list of lists, got {data!r}")
        return cls(tuple(Partition(tuple(c)) for c in data))

    def __repr__(self):
        return f"Multipartition({self.to_json()})"

    def __str__(self):
        return "(" + "|".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class ChargedMultipartition:
    mp: Multipartition
    charge: Multicharge

    def __post_init__(self):
        if self.mp.r != self.charge.r:
            raise ValueError(f"{self.mp.r} components but {self.charge.r} charges")

    @classmethod
    def of(cls, components, charges, ell: int) -> ChargedMultipartition:
        return cls(Multipartition(tuple(components)), Multicharge.from_ints(charges, ell))

    @property
    def r(self) -> int:
        return self.mp.r

    @property
    def size(self) -> int:
        return self.mp.size


class Node(NamedTuple):
    a: int
    b: int
    c: int  # 1-based component index


def node_residue(ctx: Context, node: Node, s: Multicharge) -> int:
    sc = s[node.c - 1]
    if ctx.transpose_residues:
        return (node.b - node.a + sc) % ctx.ell
    return (node.a - node.b + sc) % ctx.ell


def nodes(x: ChargedMultipartition) -> Iterator[Node]:
    for c, lam in enumerate(x.mp, start=1):
        for a, b in lam.cells():
            yield Node(a, b, c)


def residue_vector(ctx: Context, x: ChargedMultipartition) -> RootVector:
    d = [0] * ctx.ell
    for node in nodes(x):
        d[node_residue(ctx, node, x.charge)] += 1
    return RootVector(d)


def removable_nodes(x: ChargedMultipartition) -> list[Node]:
    out = []
    for c, lam in enumerate(x.mp, start=1):
        for b in range(len(lam)):
            if lam.part(b) > lam.part(b + 1):
                out.append(Node(lam.part(b) - 1, b, c))
    return out


def addable_nodes(x: ChargedMultipartition) -> list[Node]:
    out = []
    for c, lam in enumerate(x.mp, start=1):
        for b in range(len(lam) + 1):
            if b == 0 or lam.part(b - 1) > lam.part(b):
                out.append(Node(lam.part(b), b, c))
    return out


def node_classes(ctx: Context, x: ChargedMultipartition, i: int) -> tuple[list[Node], list[Node]]:
    """Removable and addable ``i``-nodes of ``x``."""
    i %= ctx.ell
    rem = [v for v in removable_nodes(x) if node_residue(ctx, v, x.charge) == i]
    add = [v for v in addable_nodes(x) if node_residue(ctx, v, x.charge) == i]
    return rem, add


def hub(ctx: Context, x: ChargedMultipartition) -> WeightVector:
    lam = [0] * ctx.ell
    for v in removable_nodes(x):
        lam[node_residue(ctx, v, x.charge)] += 1
    for v in addable_nodes(x):
        lam[node_residue(ctx, v, x.charge)] -= 1
    return WeightVector(lam, 0)


def omega_from_residue(ctx: Context, d: RootVector, s: Multicharge) -> int:
    twice = 2 * sum(d[sj] for sj in s) - cartan_pair(ctx, d, d)
    assert twice % 2 == 0, "the Cartan self-pairing is always even"
    return twice // 2


def omega_weight(ctx: Context, x: ChargedMultipartition) -> int:
    """Fayers' weight of a charged multipartition."""
    return omega_from_residue(ctx, residue_vector(ctx, x), x.charge)


def weyl_apply(ctx: Context, i: int, x: ChargedMultipartition) -> ChargedMultipartition:
    """Remove every removable ``i``-node and add every addable ``i``-node.

    Two ``i``-nodes are never adjacent, so the changes do not interact and a
    single pass over the rows suffices.
    """
    rem, add = node_classes(ctx, x, i)
    rows = [list(lam.parts) for lam in x.mp]
    for v in rem:
        rows[v.c - 1][v.b] -= 1
    for v in add:
        row = rows[v.c - 1]
        if v.b == len(row):
            row.append(1)
        else:
            row[v.b] += 1
    return ChargedMultipartition(Multipartition(tuple(Partition(tuple(r)) for r in rows)), x.charge)


def is_ell_core(ctx: Context, lam: Partition) -> bool:
    return ctx.ell not in lam.hook_lengths()


def is_multicore(ctx: Context, mp: Multipartition) -> bool:
    return all(is_ell_core(ctx, lam) for lam in mp)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


def enumerate_multipartitions(n: int, r: int) -> Iterator[Multipartition]:
    """All ``r``-multipartitions of ``n``, each exactly once.

    Size compositions are visited with the first component largest first;
    within a composition each component runs through its partitions in
    reverse lexicographic order.
    """
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    for comp in _compositions(n, r):
        yield from _product(comp)


def _product(comp: tuple[int, ...]) -> Iterator[Multipartition]:
    if not comp:
        yield Multipartition(())
        return
    for head in partitions(comp[0]):
        for tail in _product(comp[1:]):
            yield Multipartition((head,) + tail.components)



def removes_rim_hook(lam: Partition, mu: Partition, h: int) -> bool:
    """True iff ``lam / mu`` is a rim hook of size ``h``.

    Checked on the diagrams: containment, size, edge-connectedness and no
    2x2 square inside the skew shape.
    """
    if any(mu.part(b) > lam.part(b) for b in range(len(mu))):
        return False
    skew = {(a, b) for a, b in lam.cells() if a >= mu.part(b)}
    if len(skew) != h:
        return False
    if any({(a + 1, b), (a, b + 1), (a + 1, b + 1)} <= skew for a, b in skew):
        return False
    start = next(iter(skew), None)
    if start is None:
        return h == 0
    seen, stack = {start}, [start]
    while stack:
        a, b = stack.pop()
        for nb in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
            if nb in skew and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == h
