"""Blocks of H_{n,r}(ell, s) and the components of the fixed-point locus.

Blocks are keyed by residue vector.  Each summary carries the invariants
that characterise it: hub, weight, the maximal dominant weight and its
delta-depth ``k``, and the charged core shared by its members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .abacus import abacus_from, charged_core, core_abacus, find_r_cycle
from .lattice import (
    Context,
    Multicharge,
    RootVector,
    WeightVector,
    block_invariants,
    cartan_pair,
    charge_data,
)
from .young import (
    ChargedMultipartition,
    Multipartition,
    enumerate_multipartitions,
    hub,
    is_multicore,
    omega_weight,
    residue_vector,
)


@dataclass(frozen=True)
class BlockSummary:
    key: RootVector
    members: tuple[Multipartition, ...]
    n: int
    hub: WeightVector
    omega: int
    dim: int
    k: int
    lambda_plus: WeightVector
    core: tuple[Multipartition, Multicharge]
    is_core_block: bool

    def to_json(self) -> dict:
        core_mp, core_charge = self.core
        return {
            "d": self.key.to_json(),
            "n": self.n,
            "hub": {"lam": list(self.hub.lam)},
            "omega": self.omega,
            "dim": self.dim,
            "k": self.k,
            "lambda_plus": {"lam": list(self.lambda_plus.lam)},
            "core": {"mp": core_mp.to_json(), "charge": core_charge.to_json()},
            "core_block": self.is_core_block,
            "members": [m.to_json() for m in self.members],
        }

    @classmethod
    def from_json(cls, data: dict) -> BlockSummary:
        ell = len(data["d"])
        return cls(
            key=RootVector(data["d"]),
            members=tuple(Multipartition.from_json(m) for m in data["members"]),
            n=data["n"],
            hub=WeightVector(data["hub"]["lam"]),
            omega=data["omega"],
            dim=data["dim"],
            k=data["k"],
            lambda_plus=WeightVector(data["lambda_plus"]["lam"]),
            core=(
                Multipartition.from_json(data["core"]["mp"]),
                Multicharge.from_ints(data["core"]["charge"], ell),
            ),
            is_core_block=data["core_block"],
        )


class ComponentRecord(NamedTuple):
    d: RootVector
    dim: int


def component_dimension(ctx: Context, d: RootVector, s: Multicharge) -> int:
    """``2 d.w^s - <d, d>``; only meaningful for ``d`` in the index set."""
    _, w = charge_data(ctx, s)
    return 2 * sum(a * b for a, b in zip(d, w)) - cartan_pair(ctx, d, d)


def dimension_from_invariants(ctx: Context, d: RootVector, s: Multicharge) -> int:
    """The same dimension recomputed as ``2kr + 2 alpha.w - <alpha, alpha>``."""
    inv = block_invariants(ctx, d, s)
    if inv is None:
        raise ValueError(f"{d} is not in the component index set")
    _, w = charge_data(ctx, s)
    alpha = inv.alpha
    return 2 * inv.k * s.r + 2 * sum(a * b for a, b in zip(alpha, w)) - cartan_pair(ctx, alpha, alpha)


def summarize(ctx: Context, s: Multicharge, members: Sequence[Multipartition]) -> BlockSummary:
    first = ChargedMultipartition(members[0], s)
    d = residue_vector(ctx, first)
    inv = block_invariants(ctx, d, s)
    if inv is None:
        raise RuntimeError(f"residue {d} of {members[0]} is not a weight; this is a bug")
    omega = omega_weight(ctx, first)
    core = charged_core(ctx, first)
    return BlockSummary(
        key=d,
        members=tuple(members),
        n=first.size,
        hub=hub(ctx, first),
        omega=omega,
        dim=2 * omega,
        k=inv.k,
        lambda_plus=inv.lambda_plus,
        core=(core.mp, core.charge),
        is_core_block=inv.k == 0,
    )


def group_by_residue(ctx: Context, n: int, s: Multicharge) -> dict[RootVector, list[Multipartition]]:
    groups: dict[RootVector, list[Multipartition]] = {}
    for mp in enumerate_multipartitions(n, s.r):
        groups.setdefault(residue_vector(ctx, ChargedMultipartition(mp, s)), []).append(mp)
    return groups


def classify_blocks(ctx: Context, n: int, s: Multicharge) -> list[BlockSummary]:
    """Split the r-multipartitions of ``n`` into blocks.

    Blocks appear in the order their first member is enumerated.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return [summarize(ctx, s, members) for members in group_by_residue(ctx, n, s).values()]


def _weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cut in itertools.combinations(range(n + parts - 1), parts - 1):
        bounds = (-1,) + cut + (n + parts - 1,)
        yield tuple(bounds[k + 1] - bounds[k] - 1 for k in range(parts))


def component_index_set(ctx: Context, n: int, s: Multicharge, method: str = "fock") -> set[RootVector]:
    """Dimension vectors of the components, from multipartitions or from the lattice."""
    if method == "fock":
        return {
            residue_vector(ctx, ChargedMultipartition(mp, s)) for mp in enumerate_multipartitions(n, s.r)
        }
    if method == "lattice":
        return {
            d
            for d in map(RootVector, _weak_compositions(n, ctx.ell))
            if block_invariants(ctx, d, s) is not None
        }
    raise ValueError(f"unknown method {method!r}; expected 'fock' or 'lattice'")


def components(ctx: Context, n: int, s: Multicharge, method: str = "fock") -> list[ComponentRecord]:
    keys = sorted(component_index_set(ctx, n, s, method), key=lambda d: d.coeffs, reverse=True)
    return [ComponentRecord(d, component_dimension(ctx, d, s)) for d in keys]


def is_core_block(ctx: Context, x: ChargedMultipartition | BlockSummary) -> bool:
    if isinstance(x, BlockSummary):
        return x.k == 0
    inv = block_invariants(ctx, residue_vector(ctx, x), x.charge)
    return inv is not None and inv.k == 0


def r_cycle_count(ctx: Context, x: ChargedMultipartition) -> int:
    inv = block_invariants(ctx, residue_vector(ctx, x), x.charge)
    if inv is None:
        raise RuntimeError(f"residue of {x} is not a weight; this is a bug")
    return inv.k


def fayers_b(ctx: Context, mp: Multipartition, lifts: Sequence[int], i: int, j: int) -> int:
    """Largest bead position in row ``j`` (1-based) congruent to ``i`` mod ell."""
    A = abacus_from(ctx, mp, lifts)
    ell = ctx.ell
    k = A.top(j)
    k -= (k - i) % ell
    while not A.bead(k, j):
        k -= ell
    return k


def _b_condition(ctx: Context, mp: Multipartition, lifts: Sequence[int]) -> bool:
    for i in range(ctx.ell):
        bs = [fayers_b(ctx, mp, lifts, i, j) for j in range(1, mp.r + 1)]
        # all bs share the residue i, so they fit in {a, a+ell} iff the spread is <= ell
        if max(bs) - min(bs) > ctx.ell:
            return False
    return True


def fayers_core_criterion(ctx: Context, x: ChargedMultipartition, lift_radius: int | None = None) -> bool:
    """Multicore plus some lift of the multicharge with every ``b_ij`` in ``{a_i, a_i + ell}``.

    Lifts ``s_j + ell*t`` with ``|t| <= lift_radius`` are searched.  A common
    shift of all lifts changes nothing, so the first lift stays fixed.
    """
    if lift_radius is None:
        lift_radius = 1 + -(-x.size // ctx.ell)
    if lift_radius < 1:
        raise ValueError("lift_radius must be >= 1")
    if not is_multicore(ctx, x.mp):
        return False
    base = x.charge.residues
    shifts = range(-lift_radius, lift_radius + 1)
    for tail in itertools.product(shifts, repeat=x.r - 1):
        lifts = (base[0],) + tuple(s + ctx.ell * t for s, t in zip(base[1:], tail))
        if _b_condition(ctx, x.mp, lifts):
            return True
    return False


def has_r_cycle(ctx: Context, x: ChargedMultipartition) -> bool:
    """Search for an r-cycle at the conclusive depth ``omega``."""
    return find_r_cycle(core_abacus(ctx, x), omega_weight(ctx, x)) is not None
