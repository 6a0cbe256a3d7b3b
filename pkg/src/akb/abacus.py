"""r-abaci, ell-elementary operations, charged ell-cores and Uglov's map.

Rows are numbered 1..r with row 1 at the bottom.  A row is stored as a
``(charge, Partition)`` pair; its beads are ``lam_i - i + charge`` for all
``i >= 0``.  Everything at or below ``charge - len(lam)`` is a bead and
everything above ``charge + lam_0`` is a hole.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .lattice import Context, Multicharge
from .young import ChargedMultipartition, Multipartition, Partition


class OpPosition(NamedTuple):
    i: int  # position
    j: int  # row, 1-based


def _sea(charge: int, lam: Partition) -> int:
    """Highest position below which (inclusive) the row is solid beads."""
    return charge - len(lam)


def _top(charge: int, lam: Partition) -> int:
    return charge + lam.part(0)


def _row_bead(charge: int, lam: Partition, k: int) -> bool:
    if k <= charge - len(lam):
        return True
    # beads above the sea are lam_i - i + charge for i < len(lam), strictly decreasing
    lo, hi = 0, len(lam) - 1
    while lo <= hi:
        mid = (lo + hi) // 2
        v = lam.parts[mid] - mid + charge
        if v == k:
            return True
        if v > k:
            lo = mid + 1
        else:
            hi = mid - 1
    return False


def _beads_above(charge: int, lam: Partition, floor: int) -> set[int]:
    """All bead positions strictly above ``floor`` (which must be <= the sea)."""
    out = set(range(floor + 1, charge - len(lam) + 1))
    out.update(p - i + charge for i, p in enumerate(lam.parts))
    return out


def row_from_beads(beads: Iterable[int], floor: int) -> tuple[int, Partition]:
    """Rebuild ``(charge, partition)`` from the beads above ``floor``.

    Every position ``<= floor`` is taken to be a bead.
    """
    b = sorted(beads, reverse=True)
    charge = floor + len(b)
    return charge, Partition(tuple(x + i - charge for i, x in enumerate(b)))


@dataclass(frozen=True)
class Abacus:
    ell: int
    rows: tuple[tuple[int, Partition], ...]

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")
        object.__setattr__(self, "rows", tuple((int(c), lam) for c, lam in self.rows))

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.rows)

    def bead(self, k: int, j: int) -> bool:
        c, lam = self.rows[j - 1]
        return _row_bead(c, lam, k)

    def beads_in(self, j: int, lo: int, hi: int) -> list[int]:
        return [k for k in range(lo, hi + 1) if self.bead(k, j)]

    def sea(self, j: int) -> int:
        c, lam = self.rows[j - 1]
        return _sea(c, lam)

    def top(self, j: int) -> int:
        c, lam = self.rows[j - 1]
        return _top(c, lam)

    def total_size(self) -> int:
        return sum(lam.size for _, lam in self.rows)

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "rows": [{"charge": c, "shape": list(lam.parts)} for c, lam in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> Abacus:
        return cls(
            data["ell"],
            tuple((row["charge"], Partition(tuple(row["shape"]))) for row in data["rows"]),
        )


def abacus_from(ctx: Context, mp: Multipartition, lifts: Sequence[int]) -> Abacus:
    if len(lifts) != mp.r:
        raise ValueError(f"{mp.r} components but {len(lifts)} lifts")
    return Abacus(ctx.ell, tuple(zip((int(s) for s in lifts), mp.components)))


def abacus_to(A: Abacus) -> tuple[Multipartition, tuple[int, ...]]:
    return Multipartition(tuple(lam for _, lam in A.rows)), A.charges


def sort_for_core(
    ctx: Context, x: ChargedMultipartition
) -> tuple[Multipartition, tuple[int, ...], tuple[int, ...]]:
    """Stable-sort components by their canonical lift in ``[0, ell)``.

    Returns ``(sorted multipartition, sorted lifts, permutation)`` where
    ``permutation[k]`` is the 0-based original index of sorted component ``k``.
    """
    lifts = tuple(x.charge.residues)
    perm = tuple(sorted(range(x.r), key=lambda j: lifts[j]))
    mp = Multipartition(tuple(x.mp[j] for j in perm))
    return mp, tuple(lifts[j] for j in perm), perm


def applicable_ops(A: Abacus) -> list[OpPosition]:
    """Every position where an elementary operation is possible, sorted by (j, i)."""
    ops = []
    r, ell = A.r, A.ell
    for j in range(1, r + 1):
        if j < r:
            # need a hole in row j+1, and those all lie above its sea
            lo, target = A.sea(j + 1) + 1, j + 1
            cands = (i for i in range(lo, A.top(j) + 1) if A.bead(i, j) and not A.bead(i, target))
        else:
            lo = A.sea(1) + 1 + ell
            cands = (i for i in range(lo, A.top(r) + 1) if A.bead(i, r) and not A.bead(i - ell, 1))
        ops.extend(OpPosition(i, j) for i in cands)
    return ops


def _remove_bead(row: tuple[int, Partition], k: int) -> tuple[int, Partition]:
    c, lam = row
    floor = min(k, _sea(c, lam)) - 1
    beads = _beads_above(c, lam, floor)
    beads.discard(k)
    return row_from_beads(beads, floor)


def _add_bead(row: tuple[int, Partition], k: int) -> tuple[int, Partition]:
    c, lam = row
    floor = _sea(c, lam)
    beads = _beads_above(c, lam, floor)
    beads.add(k)
    return row_from_beads(beads, floor)


def elementary_op(A: Abacus, p: OpPosition) -> Abacus | None:
    """Apply the ell-elementary operation at ``p``; ``None`` if it is impossible."""
    i, j = p
    if not 1 <= j <= A.r or not A.bead(i, j):
        return None
    if j < A.r:
        dest_pos, dest_row = i, j + 1
    else:
        dest_pos, dest_row = i - A.ell, 1
    if A.bead(dest_pos, dest_row):
        return None
    rows = list(A.rows)
    rows[j - 1] = _remove_bead(rows[j - 1], i)
    rows[dest_row - 1] = _add_bead(rows[dest_row - 1], dest_pos)
    return Abacus(A.ell, tuple(rows))


def apply_ops(A: Abacus, ops: Iterable[OpPosition]) -> Abacus:
    for p in ops:
        B = elementary_op(A, p)
        if B is None:
            raise ValueError(f"elementary operation at {tuple(p)} is impossible")
        A = B
    return A


def reduce_to_core(A: Abacus, rng: random.Random | None = None) -> tuple[Abacus, int]:
    """Apply elementary operations until none is possible.

    With ``rng=None`` the lexicographically smallest ``(j, i)`` is taken each
    time; otherwise ``rng`` picks uniformly among the applicable operations.
    """
    count = 0
    while True:
        ops = applicable_ops(A)
        if not ops:
            return A, count
        p = ops[0] if rng is None else rng.choice(ops)
        A = elementary_op(A, p)
        count += 1


class ChargedCore(NamedTuple):
    mp: Multipartition
    charge: Multicharge
    omega: int
    lifts: tuple[int, ...]
    permutation: tuple[int, ...]


def core_abacus(ctx: Context, x: ChargedMultipartition) -> Abacus:
    """The abacus the core procedure starts from: sorted canonical lifts."""
    mp, lifts, _ = sort_for_core(ctx, x)
    return abacus_from(ctx, mp, lifts)


def charged_core(ctx: Context, x: ChargedMultipartition, rng: random.Random | None = None) -> ChargedCore:
    mp, lifts, perm = sort_for_core(ctx, x)
    core, ops = reduce_to_core(abacus_from(ctx, mp, lifts), rng)
    gamma, new_lifts = abacus_to(core)
    return ChargedCore(gamma, Multicharge.from_ints(new_lifts, ctx.ell), ops, new_lifts, perm)


def uglov_source(y: int, r: int, ell: int) -> tuple[int, int]:
    """Position and row of the r-abacus that feeds position ``y`` of Uglov's abacus."""
    q, m = divmod(y - 1, r * ell)
    return ell * q + (m % ell) + 1, r - m // ell


def uglov_abacus(A: Abacus) -> tuple[Partition, int]:
    """Fold an r-abacus into a single row; works for arbitrary integer charges."""
    r, ell = A.r, A.ell
    block = r * ell
    lowest = min(A.sea(j) for j in range(1, r + 1))
    highest = max(A.top(j) for j in range(1, r + 1))
    q_lo = lowest // ell - 1
    q_hi = highest // ell + 1
    floor = q_lo * block
    beads = []
    for y in range(floor + 1, q_hi * block + 1):
        if A.bead(*uglov_source(y, r, ell)):
            beads.append(y)
    charge, lam = row_from_beads(beads, floor)
    return lam, charge


def uglov_tau(ctx: Context, mp: Multipartition, lifts: Sequence[int]) -> tuple[Partition, int]:
    """Uglov's map on a multipartition with nondecreasing lifts in ``[0, ell)``."""
    lifts = tuple(int(s) for s in lifts)
    if len(lifts) != mp.r:
        raise ValueError(f"{mp.r} components but {len(lifts)} lifts")
    if any(not 0 <= s < ctx.ell for s in lifts):
        raise ValueError(f"lifts {list(lifts)} must lie in [0, {ctx.ell})")
    if any(lifts[k] > lifts[k + 1] for k in range(len(lifts) - 1)):
        raise ValueError(f"lifts {list(lifts)} must be nondecreasing")
    return uglov_abacus(abacus_from(ctx, mp, lifts))


class RCycle(NamedTuple):
    prefix: tuple[OpPosition, ...]
    cycle: tuple[OpPosition, ...]


@lru_cache(maxsize=65536)
def _cycle_from(A: Abacus) -> tuple[OpPosition, ...] | None:
    # r operations restore the charges iff each row is used exactly once
    def search(B: Abacus, used: frozenset[int], path: tuple[OpPosition, ...]):
        if len(path) == A.r:
            return path if B.charges == A.charges else None
        for p in applicable_ops(B):
            if p.j in used:
                continue
            found = search(elementary_op(B, p), used | {p.j}, path + (p,))
            if found is not None:
                return found
        return None

    return search(A, frozenset(), ())


def find_r_cycle(A: Abacus, depth: int) -> RCycle | None:
    """Breadth-first search for an r-cycle among abaci reachable in ``depth`` steps.

    The witness is the first one met in breadth-first order with operations
    expanded in ``(j, i)`` order, so it is deterministic.
    """
    seen = {A}
    queue = deque([(A, ())])
    while queue:
        B, prefix = queue.popleft()
        cyc = _cycle_from(B)
        if cyc is not None:
            return RCycle(prefix, cyc)
        if len(prefix) >= depth:
            continue
        for p in applicable_ops(B):
            C = elementary_op(B, p)
            if C not in seen:
                seen.add(C)
                queue.append((C, prefix + (p,)))
    return None


def render(A: Abacus, lo: int, hi: int) -> str:
    """Text picture of the abacus, top row first; ``o`` bead, ``.`` hole."""
    if lo > hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    lines = []
    for j in range(A.r, 0, -1):
        chars = []
        for k in range(lo, hi + 1):
            if k == 0:
                chars.append("|")
            chars.append("o" if A.bead(k, j) else ".")
        if hi == -1:
            chars.append("|")
        lines.append("".join(chars))
    return "\n".join(lines)


def is_core_by_abacus(lam: Partition, ell: int) -> bool:
    """No bead has a hole ``ell`` positions to its left."""
    A = Abacus(ell, ((0, lam),))
    return not any(
        A.bead(k, 1) and not A.bead(k - ell, 1) for k in range(A.sea(1) + 1, A.top(1) + 1)
    )
