"""Property sweeps behind ``akb verify``.

Each property walks the grid of ``(ell, r, multicharge, n)`` cases and keeps
an instance count plus the first counterexample it meets.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .abacus import (
    abacus_from,
    applicable_ops,
    charged_core,
    core_abacus,
    elementary_op,
    reduce_to_core,
    sort_for_core,
    uglov_abacus,
    uglov_tau,
)
from .blocks import (
    classify_blocks,
    component_dimension,
    component_index_set,
    dimension_from_invariants,
    fayers_core_criterion,
    has_r_cycle,
)
from .lattice import (
    Context,
    Multicharge,
    WeightVector,
    block_invariants,
    c_gamma,
    charge_data,
    dot_reflect,
    root_as_weight,
    roots_congruent_mod_delta,
)
from .young import (
    ChargedMultipartition,
    Multipartition,
    enumerate_multipartitions,
    hub,
    omega_weight,
    partitions,
    removes_rim_hook,
    residue_vector,
    weyl_apply,
)

PROPERTIES = {
    "A2": "dimension tri-identity and reduction op-count",
    "A3": "core multicharge matches the maximal dominant weight",
    "A4": "hub identity",
    "A5": "residue / (hub, n) / charged-core partitions agree",
    "A6": "core-block tri-equivalence and minimality",
    "A7": "index sets agree; dims even and in [0, 2nr]",
    "A8": "Weyl equivariance and involutions",
    "A9": "core independent of reduction order",
    "A10": "Uglov residue identities and ell-hook correspondence",
    "A11": "r=1 block count vs classical ell-cores",
}


class GridCase(NamedTuple):
    ell: int
    r: int
    charge: tuple[int, ...]
    n_max: int


def grid_multicharges(ell: int, r: int, seed: int) -> list[tuple[int, ...]]:
    """Zero, all-ones, and two seeded random multicharges."""
    rng = random.Random(seed * 1_000_003 + 97 * ell + r)
    out = [(0,) * r, (1,) * r]
    out += [tuple(rng.randrange(ell) for _ in range(r)) for _ in range(2)]
    return out


def acceptance_grid(
    seed: int = 0, ells: Iterable[int] = (2, 3, 4), rs: Iterable[int] = (1, 2, 3), n_max: int = 6
) -> list[GridCase]:
    return [
        GridCase(ell, r, s, n_max)
        for ell in ells
        for r in rs
        for s in grid_multicharges(ell, r, seed)
    ]


@dataclass
class PropertyResult:
    key: str
    instances: int = 0
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def check(self, cond: bool, witness) -> None:
        self.instances += 1
        if not cond and self.counterexample is None:
            self.counterexample = witness() if callable(witness) else str(witness)

    def merge(self, other: PropertyResult) -> None:
        self.instances += other.instances
        if self.counterexample is None:
            self.counterexample = other.counterexample


def _fmt(x: ChargedMultipartition) -> str:
    return f"mp={x.mp.to_json()} s={list(x.charge.residues)} ell={x.charge.ell}"


def check_case(case: GridCase, transpose: bool = False) -> dict[str, PropertyResult]:
    """Run the grid-wide properties (A2-A7, A10) on one ``(ell, r, s)``."""
    ell, r = case.ell, case.r
    ctx = Context(ell, r, transpose_residues=transpose)
    s = Multicharge(case.charge, ell)
    ls, w = charge_data(ctx, s)
    res = {k: PropertyResult(k) for k in ("A2", "A3", "A4", "A5", "A6", "A7", "A10")}
    one = Context(ell, 1)
    blocks_by_n = {}

    for n in range(case.n_max + 1):
        by_res, by_hub, by_core = {}, {}, {}
        for mp in enumerate_multipartitions(n, r):
            x = ChargedMultipartition(mp, s)
            d = residue_vector(ctx, x)
            inv = block_invariants(ctx, d, s)
            core = charged_core(ctx, x)
            om = omega_weight(ctx, x)
            th = hub(ctx, x)
            by_res.setdefault(d, []).append(mp)
            by_hub.setdefault(th.lam, []).append(mp)
            by_core.setdefault((core.mp, core.charge), []).append(mp)

            if inv is None:
                res["A2"].check(False, lambda: f"{_fmt(x)}: residue {d} is not a weight")
                res["A3"].check(False, lambda: f"{_fmt(x)}: residue {d} is not a weight")
            else:
                dims = (2 * om, component_dimension(ctx, d, s), dimension_from_invariants(ctx, d, s))
                res["A2"].check(
                    len(set(dims)) == 1 and core.omega == om,
                    lambda: f"{_fmt(x)}: 2*omega, dim, invariants = {dims}; ops={core.omega}",
                )
                core_weight = charge_data(ctx, core.charge)[0]
                res["A3"].check(
                    core_weight.lam == inv.lambda_plus.lam,
                    lambda: f"{_fmt(x)}: core charge {list(core.charge)} vs Lambda+ {list(inv.lambda_plus.lam)}",
                )
            res["A4"].check(
                th.lam == (c_gamma(ctx, d) - ls).lam,
                lambda: f"{_fmt(x)}: hub {list(th.lam)}",
            )
            _check_uglov(res["A10"], ctx, one, x, d, ls)

            if inv is not None:
                k0 = inv.k == 0
                fay = fayers_core_criterion(ctx, x)
                cyc = has_r_cycle(ctx, x)
                res["A6"].check(
                    k0 == fay == (not cyc),
                    lambda: f"{_fmt(x)}: k={inv.k} fayers={fay} r-cycle={cyc}",
                )

        parts = [{frozenset(g) for g in grouping.values()} for grouping in (by_res, by_hub, by_core)]
        res["A5"].check(
            parts[0] == parts[1] == parts[2],
            lambda: f"ell={ell} s={list(s)} n={n}: groupings differ ({len(by_res)}, {len(by_hub)}, {len(by_core)} classes)",
        )

        fock = component_index_set(ctx, n, s, "fock")
        lat = component_index_set(ctx, n, s, "lattice")
        dims_ok = all(
            (dm := component_dimension(ctx, d, s)) % 2 == 0 and 0 <= dm <= 2 * n * r for d in fock
        )
        res["A7"].check(
            fock == lat and dims_ok,
            lambda: f"ell={ell} s={list(s)} n={n}: fock-only {sorted(map(str, fock - lat))} lattice-only {sorted(map(str, lat - fock))}",
        )
        blocks_by_n[n] = classify_blocks(ctx, n, s)

    for n, blocks in blocks_by_n.items():
        for B in blocks:
            if not B.is_core_block:
                continue
            for m in range(n + 1):
                for B2 in blocks_by_n[m]:
                    if B2.hub.lam == B.hub.lam and B2.omega <= B.omega:
                        res["A6"].check(
                            B2.key == B.key,
                            lambda: f"ell={ell} s={list(s)}: core block {B.key} (n={n}) undercut by {B2.key} (m={m})",
                        )
    return res


def _check_uglov(result, ctx, one, x, d, ls) -> None:
    ell, r = ctx.ell, x.r
    mp, lifts, _ = sort_for_core(ctx, x)
    tau, S = uglov_tau(ctx, mp, lifts)
    tau0, S0 = uglov_tau(ctx, Multipartition.empty(r), lifts)
    S_res = Multicharge((S,), ell)
    rt = residue_vector(one, ChargedMultipartition(Multipartition((tau,)), S_res))
    r0 = residue_vector(one, ChargedMultipartition(Multipartition((tau0,)), S_res))
    expected = WeightVector.fundamental(ell, 0) * (r - 1) + WeightVector.fundamental(ell, S)
    ok = (
        S == S0 == sum(lifts)
        and roots_congruent_mod_delta(d, rt - r0)
        and (ls + root_as_weight(ctx, r0)).lam == expected.lam
    )
    result.check(ok, lambda: f"{_fmt(x)}: tau={tau} S={S}")

    A = abacus_from(ctx, mp, lifts)
    for p in applicable_ops(A):
        B = elementary_op(A, p)
        big, _ = uglov_abacus(A)
        small, S2 = uglov_abacus(B)
        result.check(
            S2 == S and big.size - small.size == ell and removes_rim_hook(big, small, ell),
            lambda: f"{_fmt(x)}: op at {tuple(p)} maps {big} to {small}",
        )


def check_equivariance(samples: int, seed: int, ells=(2, 3, 4), rs=(1, 2, 3), n_max: int = 6) -> PropertyResult:
    res = PropertyResult("A8")
    rng = random.Random(seed)
    for _ in range(samples):
        x, ctx = random_charged(rng, ells, rs, n_max)
        i = rng.randrange(ctx.ell)
        y = weyl_apply(ctx, i, x)
        d = residue_vector(ctx, x)
        ok = (
            residue_vector(ctx, y) == dot_reflect(ctx, i, d, x.charge)
            and weyl_apply(ctx, i, y) == x
            and dot_reflect(ctx, i, dot_reflect(ctx, i, d, x.charge), x.charge) == d
        )
        res.check(ok, lambda: f"{_fmt(x)} i={i}")
    return res


def check_order_independence(instances: int, policies: int, seed: int, ells=(2, 3, 4), rs=(1, 2, 3), n_max: int = 6) -> PropertyResult:
    res = PropertyResult("A9")
    rng = random.Random(seed + 1)
    for _ in range(instances):
        x, ctx = random_charged(rng, ells, rs, n_max)
        A = core_abacus(ctx, x)
        ref = reduce_to_core(A)
        for _ in range(policies):
            got = reduce_to_core(A, random.Random(rng.getrandbits(32)))
            res.check(got == ref, lambda: f"{_fmt(x)}: {got} vs {ref}")
    return res


def check_classical(ells=(2, 3, 4), n_max: int = 10) -> PropertyResult:
    res = PropertyResult("A11")
    for ell in ells:
        ctx = Context(ell, 1)
        s = Multicharge((0,), ell)
        cores = [lam for m in range(n_max + 1) for lam in partitions(m) if ell not in lam.hook_lengths()]
        for n in range(n_max + 1):
            expected = sum(1 for c in cores if c.size <= n and (n - c.size) % ell == 0)
            got = len(classify_blocks(ctx, n, s))
            res.check(got == expected, f"ell={ell} n={n}: {got} blocks, {expected} cores")
    return res


def random_charged(rng: random.Random, ells, rs, n_max) -> tuple[ChargedMultipartition, Context]:
    ell = rng.choice(list(ells))
    r = rng.choice(list(rs))
    n = rng.randrange(n_max + 1)
    mps = list(enumerate_multipartitions(n, r))
    mp = rng.choice(mps)
    s = Multicharge(tuple(rng.randrange(ell) for _ in range(r)), ell)
    return ChargedMultipartition(mp, s), Context(ell, r)


@dataclass
class Report:
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def lines(self) -> Iterator[str]:
        for key, desc in PROPERTIES.items():
            r = self.results.get(key)
            if r is None:
                continue
            status = "ok" if r.ok else "FAIL"
            yield f"{key:<4} {status:<4} {r.instances:>7}  {desc}"
            if not r.ok:
                yield f"     counterexample: {r.counterexample}"
        yield "all properties hold" if self.ok else "some properties FAILED"


def run_verification(
    seed: int = 0,
    ells=(2, 3, 4),
    rs=(1, 2, 3),
    n_max: int = 6,
    samples: int = 500,
    order_instances: int = 50,
    policies: int = 100,
    classical_n_max: int | None = None,
    transpose: bool = False,
    workers: int | None = None,
) -> Report:
    if workers is None:
        workers = max(1, int(os.environ.get("AKB_THREADS", "1")))
    cases = acceptance_grid(seed, ells, rs, n_max)
    report = Report({k: PropertyResult(k) for k in PROPERTIES})
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(check_case, cases, [transpose] * len(cases)))
    else:
        outs = [check_case(c, transpose) for c in cases]
    for out in outs:
        for key, r in out.items():
            report.results[key].merge(r)
    if cases:
        report.results["A8"] = check_equivariance(samples, seed, ells, rs, n_max)
        report.results["A9"] = check_order_independence(order_instances, policies, seed, ells, rs, n_max)
    if classical_n_max is None:
        classical_n_max = n_max + 4
    report.results["A11"] = check_classical(ells, classical_n_max)
    return report
