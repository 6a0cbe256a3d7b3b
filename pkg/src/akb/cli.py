"""``akb``: command-line front end.

Every command prints compact JSON by default; ``--format table`` gives a
human-readable layout instead.  Exit codes: 0 success, 1 ``verify`` found a
counterexample, 2 bad arguments, 3 an internal invariant broke.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .abacus import Abacus, abacus_from, charged_core, render, sort_for_core, uglov_abacus, uglov_tau
from .blocks import classify_blocks, components
from .lattice import Context, Multicharge, block_invariants
from .young import ChargedMultipartition, Multipartition, hub, omega_weight, residue_vector

MAX_TABLE_MEMBERS = 20


class UsageError(ValueError):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _window(text: str) -> tuple[int, int]:
    vals = _ints(text)
    if len(vals) != 2 or vals[0] > vals[1]:
        raise argparse.ArgumentTypeError(f"expected lo,hi with lo <= hi, got {text!r}")
    return vals[0], vals[1]


def _mp(text: str) -> Multipartition:
    try:
        return Multipartition.from_json(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad multipartition {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akb", description="Blocks, cores and abaci for Ariki-Koike algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, n=False, mp=False, fmt=True):
        p.add_argument("--ell", type=int, required=True, help="order of the cyclic group (>= 2)")
        p.add_argument("--r", type=int, help="level; defaults to the length of --charge")
        p.add_argument("--charge", type=_ints, help="multicharge, comma-separated, reduced mod ell")
        if n:
            p.add_argument("--n", type=int, required=True, help="size of the multipartitions")
        if mp:
            p.add_argument("--mp", type=_mp, required=True, help='multipartition literal, e.g. "[[2,1],[]]"')
        if fmt:
            p.add_argument("--format", choices=("json", "table"), default="json")
        return p

    common(sub.add_parser("res", help="residue vector, weight, hub and dimension of one multipartition"), mp=True)
    common(sub.add_parser("core", help="charged ell-core of one multipartition"), mp=True)

    p = common(sub.add_parser("uglov", help="Uglov's map to a single charged partition"), mp=True)
    p.add_argument("--lift", type=_ints, help="integer lifts of the charge (used as given, no sorting)")

    p = common(sub.add_parser("blocks", help="classify the blocks of H_{n,r}"), n=True)
    p.add_argument("--plot", metavar="PATH", help="also write a bar chart of block dimensions")

    p = common(sub.add_parser("components", help="dimension vectors and dimensions of the components"), n=True)
    p.add_argument("--method", choices=("fock", "lattice"), default="fock")

    p = common(sub.add_parser("abacus", help="draw the r-abacus of a multipartition"), mp=True, fmt=False)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--lift", type=_ints, help="integer lifts; defaults to the charge residues")
    p.add_argument("--window", type=_window, help="positions lo,hi to draw")
    p.add_argument("--plot", metavar="PATH", help="also write a bead diagram")

    p = sub.add_parser("verify", help="run the property suites on a grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--ells", type=_ints, default=[2, 3, 4])
    p.add_argument("--rs", type=_ints, default=[1, 2, 3])
    p.add_argument("--samples", type=int, default=500, help="Weyl-equivariance samples")
    p.add_argument("--debug-transpose-residues", action="store_true", help=argparse.SUPPRESS)

    for p in sub.choices.values():
        p.set_defaults(subparser=p)
    return parser


def _setup(args) -> tuple[Context, Multicharge]:
    charge = args.charge
    r = args.r
    if charge is None:
        if getattr(args, "lift", None) is not None:
            charge = args.lift
        elif r is not None:
            charge = [0] * r
        elif getattr(args, "mp", None) is not None:
            charge = [0] * args.mp.r
        else:
            raise UsageError("give --charge or --r")
    if r is None:
        r = len(charge)
    if len(charge) != r:
        raise UsageError(f"--charge has {len(charge)} entries but --r is {r}")
    mp = getattr(args, "mp", None)
    if mp is not None and mp.r != r:
        raise UsageError(f"--mp has {mp.r} components but r is {r}")
    lift = getattr(args, "lift", None)
    if lift is not None and len(lift) != r:
        raise UsageError(f"--lift has {len(lift)} entries but r is {r}")
    if getattr(args, "n", 0) < 0:
        raise UsageError("--n must be >= 0")
    ctx = Context(args.ell, r)
    return ctx, Multicharge.from_ints(charge, args.ell)


def cmd_res(args) -> str:
    ctx, s = _setup(args)
    x = ChargedMultipartition(args.mp, s)
    d = residue_vector(ctx, x)
    inv = block_invariants(ctx, d, s)
    if inv is None:
        raise RuntimeError(f"residue {d} of {args.mp} is not a weight")
    om = omega_weight(ctx, x)
    out = {"d": d.to_json(), "omega": om, "hub": {"lam": list(hub(ctx, x).lam)}, "dim": 2 * om, "k": inv.k}
    if args.format == "table":
        return "\n".join(f"{k:<6} {_dump(v)}" for k, v in out.items())
    return _dump(out)


def cmd_core(args) -> str:
    ctx, s = _setup(args)
    core = charged_core(ctx, ChargedMultipartition(args.mp, s))
    out = {
        "core": {"mp": core.mp.to_json(), "charge": core.charge.to_json()},
        "lifts": list(core.lifts),
        "omega": core.omega,
        "permutation": list(core.permutation),
    }
    if args.format == "table":
        return "\n".join(f"{k:<12} {_dump(v)}" for k, v in out.items())
    return _dump(out)


def cmd_uglov(args) -> str:
    ctx, s = _setup(args)
    if args.lift is not None:
        lam, S = uglov_abacus(abacus_from(ctx, args.mp, args.lift))
    else:
        mp, lifts, _ = sort_for_core(ctx, ChargedMultipartition(args.mp, s))
        lam, S = uglov_tau(ctx, mp, lifts)
    out = {"partition": list(lam.parts), "charge": S}
    if args.format == "table":
        return f"partition {lam}\ncharge    {S}"
    return _dump(out)


def _members_cell(members) -> str:
    shown = " ".join(str(m) for m in members[:MAX_TABLE_MEMBERS])
    extra = len(members) - MAX_TABLE_MEMBERS
    return shown + (f" ... (+{extra} more)" if extra > 0 else "")


def blocks_table(blocks) -> str:
    header = ("d", "omega", "dim", "k", "core", "hub", "members")
    rows = [
        (
            ",".join(map(str, B.key)),
            str(B.omega),
            str(B.dim),
            str(B.k),
            "yes" if B.is_core_block else "no",
            ",".join(map(str, B.hub.lam)),
            _members_cell(B.members),
        )
        for B in blocks
    ]
    widths = [max(len(h), *(len(r[c]) for r in rows)) for c, h in enumerate(header[:-1])]
    lines = []
    for row in [header, *rows]:
        cells = [v.ljust(w) for v, w in zip(row[:-1], widths)]
        lines.append("  ".join(cells + [row[-1]]).rstrip())
    return "\n".join(lines)


def cmd_blocks(args) -> str:
    ctx, s = _setup(args)
    blocks = classify_blocks(ctx, args.n, s)
    if args.plot:
        from .plotting import plot_blocks

        plot_blocks(blocks, args.plot, title=f"ell={ctx.ell} s={s.to_json()} n={args.n}")
    if args.format == "table":
        return blocks_table(blocks)
    return _dump([B.to_json() for B in blocks])


def cmd_components(args) -> str:
    ctx, s = _setup(args)
    recs = components(ctx, args.n, s, args.method)
    if args.format == "table":
        lines = ["d" + " " * 11 + "dim"]
        lines += [f"{','.join(map(str, rec.d)):<12}{rec.dim}" for rec in recs]
        return "\n".join(lines)
    return _dump([{"d": rec.d.to_json(), "dim": rec.dim} for rec in recs])


def _default_window(A: Abacus) -> tuple[int, int]:
    lo = min(A.sea(j) for j in range(1, A.r + 1)) - A.ell
    hi = max(A.top(j) for j in range(1, A.r + 1)) + 1
    return min(lo, -1), max(hi, 0)


def cmd_abacus(args) -> str:
    ctx, s = _setup(args)
    lifts = args.lift if args.lift is not None else list(s.residues)
    A = abacus_from(ctx, args.mp, lifts)
    lo, hi = args.window or _default_window(A)
    if args.plot:
        from .plotting import plot_abacus

        plot_abacus(A, lo, hi, args.plot, title=f"{args.mp} lifts={list(lifts)}")
    if args.format == "json":
        out = A.to_json()
        out["window"] = [lo, hi]
        out["render"] = render(A, lo, hi).split("\n")
        return _dump(out)
    return render(A, lo, hi)


def cmd_verify(args) -> tuple[int, str]:
    from .verify import run_verification

    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if any(e < 2 for e in args.ells) or any(r < 1 for r in args.rs):
        raise UsageError("--ells must be >= 2 and --rs >= 1")
    report = run_verification(
        seed=args.seed,
        ells=tuple(args.ells),
        rs=tuple(args.rs),
        n_max=args.n_max,
        samples=args.samples,
        transpose=args.debug_transpose_residues,
    )
    return (0 if report.ok else 1), "\n".join(report.lines())


COMMANDS = {
    "res": cmd_res,
    "core": cmd_core,
    "uglov": cmd_uglov,
    "blocks": cmd_blocks,
    "components": cmd_components,
    "abacus": cmd_abacus,
    "verify": cmd_verify,
}


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--window -3,3" as two flags; rewrite to "--window=-3,3"
    out, k = [], 0
    while k < len(argv):
        if argv[k] in ("--window", "--lift", "--charge") and k + 1 < len(argv) and argv[k + 1][:1] == "-":
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Run one invocation; returns ``(exit code, stdout text)``.

    Usage errors go to stderr as argparse prints them.
    """
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        out = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        try:
            args.subparser.error(str(exc))
        except SystemExit as stop:
            return int(stop.code), ""
    except (RuntimeError, AssertionError) as exc:
        print(f"akb: internal error: {exc}", file=sys.stderr)
        return 3, ""
    if isinstance(out, tuple):
        return out
    return 0, out


def main(argv: Sequence[str] | None = None) -> None:
    code, text = run(argv)
    if text:
        print(text)
    sys.exit(code)


if __name__ == "__main__":
    main()
